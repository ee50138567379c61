// Copyright 2026 The Partlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "partlab/growth.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "partlab/error.h"

namespace partlab {

long double C0() {
  return std::numbers::pi_v<long double> * std::sqrt(2.0L / 3.0L);
}

GrowthSeries GrowthRatioSeries(const PartitionTable& table,
                               const std::vector<uint64_t>& grid) {
  GrowthSeries series{table.spec(), grid, {}};
  series.ratios.reserve(grid.size());
  const long double c0 = C0();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const uint64_t n = grid[i];
    if (n == 0 || (i > 0 && n <= grid[i - 1])) {
      throw Error(ErrorKind::kDomain,
                  "growth grid must be strictly increasing and positive");
    }
    const BigInt& count = table.at(n);
    if (sgn(count) == 0) {
      series.ratios.push_back(std::nullopt);
      continue;
    }
    series.ratios.push_back(LogBigInt(count) /
                            (c0 * std::sqrt(static_cast<long double>(n))));
  }
  return series;
}

FiniteSetRatio FiniteSetLeadingRatio(const PartitionTable& table, uint64_t n) {
  const PartSetSpec& spec = table.spec();
  if (!IsFinite(spec)) {
    throw Error(ErrorKind::kUnsupported,
                "leading-term ratio needs a finite set, got " + ToString(spec));
  }
  if (n == 0) throw Error(ErrorKind::kDomain, "n must be positive");
  const std::vector<uint64_t>& elements =
      std::holds_alternative<FiniteParts>(spec)
          ? std::get<FiniteParts>(spec).elements
          : std::get<FileParts>(spec).elements;
  const uint64_t g = std::accumulate(
      elements.begin(), elements.end(), uint64_t{0},
      [](uint64_t a, uint64_t b) { return std::gcd(a, b); });
  if (g != 1) {
    throw Error(ErrorKind::kPrecondition,
                "leading-term law needs relatively prime parts; gcd is " +
                    std::to_string(g));
  }
  const unsigned long k = elements.size();
  BigInt numerator = table.at(n);
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), k - 1);
  numerator *= factorial;
  for (uint64_t a : elements) numerator *= BigInt(static_cast<unsigned long>(a));
  BigInt denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), n, k - 1);
  Rational exact(numerator, denominator);
  exact.canonicalize();
  return {exact, RationalToLongDouble(exact)};
}

namespace {

void ValidateDirectArgs(const PartSetSpec& spec, const Rational& alpha,
                        const Rational& beta,
                        const std::vector<uint64_t>& grid) {
  if (sgn(alpha) < 0 || alpha > beta || beta > 1) {
    throw Error(ErrorKind::kPrecondition, "need 0 <= alpha <= beta <= 1");
  }
  if (grid.empty()) throw Error(ErrorKind::kDomain, "probe grid is empty");
  const GcdResult g = GcdOfSet(spec, grid.back());
  if (g.value != 1) {
    throw Error(ErrorKind::kPrecondition,
                "probe needs gcd(A) = 1 but the parts of " + ToString(spec) +
                    " up to " + std::to_string(grid.back()) + " share " +
                    std::to_string(g.value) +
                    "; normalize by the gcd first");
  }
}

}  // namespace

DirectProbeReport DirectTheoremProbe(const PartSetSpec& spec,
                                     const Rational& alpha,
                                     const Rational& beta,
                                     const std::vector<uint64_t>& grid,
                                     std::optional<Band> band) {
  ValidateDirectArgs(spec, alpha, beta, grid);
  const PartitionTable table = BuildPartitionTable(spec, grid.back());

  DirectProbeReport report;
  report.series = GrowthRatioSeries(table, grid);
  report.alpha = alpha;
  report.beta = beta;
  report.target_lower = std::sqrt(RationalToLongDouble(alpha));
  report.target_upper = std::sqrt(RationalToLongDouble(beta));
  report.band = band.value_or(
      Band{report.target_lower * (1 - kDirectBandTolerance),
           report.target_upper * (1 + kDirectBandTolerance), false});
  report.requires_decreasing_tail = sgn(beta) == 0;

  const std::size_t s = grid.size();
  report.tail_begin = s - (s + 2) / 3;
  std::vector<long double> tail;
  bool all_defined = true;
  for (std::size_t i = report.tail_begin; i < s; ++i) {
    if (report.series.ratios[i]) {
      tail.push_back(*report.series.ratios[i]);
    } else {
      all_defined = false;
    }
  }
  if (!tail.empty()) {
    report.tail_min = *std::min_element(tail.begin(), tail.end());
    report.tail_max = *std::max_element(tail.begin(), tail.end());
  }
  report.tail_trend = ClassifyTrend(tail);

  bool pass = all_defined && !tail.empty() &&
              report.band.Contains(*report.tail_min) &&
              report.band.Contains(*report.tail_max);
  if (report.requires_decreasing_tail) {
    // A single tail point cannot show a trend; fall back to the whole grid.
    std::vector<long double> trend_values = tail;
    if (trend_values.size() < 2) {
      trend_values.clear();
      for (const auto& r : report.series.ratios) {
        if (r) trend_values.push_back(*r);
      }
    }
    const bool positive = report.tail_min && *report.tail_min > 0;
    const bool band_ok = !band.has_value() || pass;
    pass = all_defined && positive && band_ok &&
           ClassifyTrend(trend_values) == Trend::kDecreasing;
  }
  report.pass = pass;
  return report;
}

DirectProbeReport ArithProgressionProbe(uint64_t modulus,
                                        const std::vector<uint64_t>& residues,
                                        const std::vector<uint64_t>& grid,
                                        std::optional<Band> band) {
  const PartSetSpec spec = MakeResidues(modulus, residues);
  uint64_t g = modulus;
  for (uint64_t r : residues) g = std::gcd(g, r);
  if (g != 1) {
    throw Error(ErrorKind::kPrecondition,
                "residues and modulus must be coprime; gcd is " +
                    std::to_string(g));
  }
  Rational density(static_cast<unsigned long>(residues.size()),
                   static_cast<unsigned long>(modulus));
  density.canonicalize();
  return DirectTheoremProbe(spec, density, density, grid, band);
}

}  // namespace partlab
