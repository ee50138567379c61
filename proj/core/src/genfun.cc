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

#include "partlab/genfun.h"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "partlab/error.h"

namespace partlab {
namespace {

// Bounds memory: every stored numerator carries about 1.44·limit bits.
constexpr uint64_t kMaxCoefficientLimit = 20'000;

BigInt LcmUpTo(uint64_t n) {
  BigInt l = 1;
  for (uint64_t k = 2; k <= n; ++k) {
    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
  }
  return l;
}

Rational Reduced(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(long double v) {
    const long double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + carry_; }

 private:
  long double sum_ = 0;
  long double carry_ = 0;
};

}  // namespace

MobiusTable MobiusSieve(uint64_t limit) {
  if (limit == 0) throw Error(ErrorKind::kDomain, "sieve limit must be >= 1");
  std::vector<int8_t> mu(limit + 1, 0);
  std::vector<uint64_t> primes;
  std::vector<bool> composite(limit + 1, false);
  mu[1] = 1;
  for (uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (uint64_t p : primes) {
      if (i * p > limit) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = static_cast<int8_t>(-mu[i]);
    }
  }
  return MobiusTable(std::move(mu));
}

CoefficientSeries::CoefficientSeries(PartSetSpec spec, BigInt denominator,
                                     std::vector<BigInt> b_numerators,
                                     std::vector<BigInt> s_numerators)
    : spec_(std::move(spec)),
      denominator_(std::move(denominator)),
      b_num_(std::move(b_numerators)),
      s_num_(std::move(s_numerators)) {}

Rational CoefficientSeries::b(uint64_t l) const {
  if (l == 0 || l > limit()) {
    throw Error(ErrorKind::kOutOfRange,
                "b index " + std::to_string(l) + " outside [1, " +
                    std::to_string(limit()) + "]");
  }
  return Reduced(b_num_[l], denominator_);
}

Rational CoefficientSeries::s(uint64_t n) const {
  if (n > limit()) {
    throw Error(ErrorKind::kOutOfRange,
                "S_B index " + std::to_string(n) + " beyond limit " +
                    std::to_string(limit()));
  }
  return Reduced(s_num_[n], denominator_);
}

CoefficientSeries BCoefficients(const PartSetSpec& spec, uint64_t limit) {
  if (limit == 0) throw Error(ErrorKind::kDomain, "limit must be >= 1");
  if (limit > kMaxCoefficientLimit) {
    throw Error(ErrorKind::kGuard,
                "coefficient tables are limited to " +
                    std::to_string(kMaxCoefficientLimit) +
                    "; use the counting identity for larger n");
  }
  const BigInt denominator = LcmUpTo(limit);
  const std::vector<uint64_t> parts = EnumerateParts(spec, limit);
  std::vector<BigInt> b(limit + 1);
  BigInt unit;  // denominator / k
  for (uint64_t k = 1; k <= limit; ++k) {
    if (parts.empty() || parts.front() * k > limit) break;
    mpz_divexact_ui(unit.get_mpz_t(), denominator.get_mpz_t(), k);
    for (uint64_t a : parts) {
      const uint64_t l = a * k;
      if (l > limit) break;
      b[l] += unit;
    }
  }
  std::vector<BigInt> s(limit + 1);
  for (uint64_t n = 1; n <= limit; ++n) s[n] = s[n - 1] + b[n];
  return CoefficientSeries(spec, denominator, std::move(b), std::move(s));
}

Rational SbViaCountingIdentity(const CountingTable& counts, uint64_t n) {
  if (n == 0) return 0;
  if (n > counts.bound()) {
    throw Error(ErrorKind::kOutOfRange, "n beyond the counting table");
  }
  const BigInt common = LcmUpTo(n);
  BigInt sum;
  BigInt term;
  for (uint64_t k = 1; k <= n; ++k) {
    const uint64_t count = counts(n / k);
    if (count == 0) continue;
    mpz_divexact_ui(term.get_mpz_t(), common.get_mpz_t(), k);
    mpz_addmul_ui(sum.get_mpz_t(), term.get_mpz_t(), count);
  }
  return Reduced(sum, common);
}

Rational SbViaCountingIdentity(const PartSetSpec& spec, uint64_t n) {
  return SbViaCountingIdentity(CountingTable(spec, n), n);
}

MobiusInverter::MobiusInverter(const CoefficientSeries& series)
    : series_(series), prefix_(series.limit() + 1) {
  const MobiusTable mu = MobiusSieve(series.limit());
  BigInt unit;
  for (uint64_t k = 1; k <= series.limit(); ++k) {
    prefix_[k] = prefix_[k - 1];
    if (mu(k) == 0) continue;
    mpz_divexact_ui(unit.get_mpz_t(), series.denominator().get_mpz_t(), k);
    if (mu(k) > 0) {
      prefix_[k] += unit;
    } else {
      prefix_[k] -= unit;
    }
  }
}

Rational MobiusInverter::Invert(uint64_t n) const {
  if (n == 0 || n > series_.limit()) {
    throw Error(ErrorKind::kOutOfRange,
                "inversion index " + std::to_string(n) + " outside [1, " +
                    std::to_string(series_.limit()) + "]");
  }
  // Group k by the shared value q = floor(n/k).
  BigInt total;
  BigInt weight;
  for (uint64_t lo = 1; lo <= n;) {
    const uint64_t q = n / lo;
    const uint64_t hi = n / q;
    weight = prefix_[hi] - prefix_[lo - 1];
    total += weight * series_.s_numerator(q);
    lo = hi + 1;
  }
  return Reduced(total, series_.denominator() * series_.denominator());
}

Rational MobiusInvertSb(const CoefficientSeries& series, uint64_t n) {
  return MobiusInverter(series).Invert(n);
}

RoundTripReport CheckMobiusRoundTrip(const PartSetSpec& spec, uint64_t limit) {
  RoundTripReport report;
  report.spec = spec;
  report.limit = limit;
  const CoefficientSeries series = BCoefficients(spec, limit);
  const MobiusInverter inverter(series);
  const CountingTable counts(spec, limit);
  for (uint64_t n = 1; n <= limit; ++n) {
    if (report.inversion_exact &&
        inverter.Invert(n) != Rational(static_cast<unsigned long>(counts(n)))) {
      report.inversion_exact = false;
      report.first_inversion_mismatch = n;
    }
    if (report.identity_exact && SbViaCountingIdentity(counts, n) != series.s(n)) {
      report.identity_exact = false;
      report.first_identity_mismatch = n;
    }
  }
  return report;
}

LogFValue LogFEval(const PartSetSpec& spec, long double x,
                   long double tail_tol) {
  if (!std::isfinite(x) || !(x > 0) || !(x < 1)) {
    throw Error(ErrorKind::kDomain, "log f(x) needs 0 < x < 1");
  }
  const long double log_x = std::log1p(x - 1);
  LogFValue result;
  if (IsFinite(spec)) {
    const auto& elements = std::holds_alternative<FiniteParts>(spec)
                               ? std::get<FiniteParts>(spec).elements
                               : std::get<FileParts>(spec).elements;
    result.cutoff = elements.back();
  } else {
    if (!(tail_tol > 0) || !std::isfinite(tail_tol)) {
      throw Error(ErrorKind::kDomain,
                  "an infinite part set needs a positive tail tolerance");
    }
    // Smallest c with x^(c+1) / (1-x)^2 <= tail_tol.
    const long double one_minus = 1 - x;
    const long double needed =
        std::log(tail_tol * one_minus * one_minus) / log_x;
    const long double c = std::max(0.0L, std::ceil(needed) - 1);
    if (c > static_cast<long double>(kMaxLogFTerms)) {
      throw Error(ErrorKind::kGuard,
                  "tail tolerance needs more than " +
                      std::to_string(kMaxLogFTerms) + " factors");
    }
    result.cutoff = static_cast<uint64_t>(c);
    result.tail_bound = std::exp((c + 1) * log_x) / (one_minus * one_minus);
  }
  CompensatedSum sum;
  ForEachPart(spec, result.cutoff, [&](uint64_t a) {
    // -log(1 - x^a) with 1 - x^a = -expm1(a·log x) to keep digits near 1.
    sum.Add(-std::log(-std::expm1(static_cast<long double>(a) * log_x)));
  });
  result.value = sum.value();
  return result;
}

long double DensityConstant(const Rational& alpha) {
  const long double pi = std::numbers::pi_v<long double>;
  return pi * pi / 6 * RationalToLongDouble(alpha);
}

AbelianProbeReport AbelianProbe(const PartSetSpec& spec, const Rational& alpha,
                                const std::vector<long double>& x_grid,
                                std::optional<Band> band,
                                long double tail_tol) {
  if (x_grid.empty()) throw Error(ErrorKind::kDomain, "x grid is empty");
  AbelianProbeReport report;
  report.spec = spec;
  report.alpha = alpha;
  report.target = DensityConstant(alpha);
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const long double x = x_grid[i];
    if (i > 0 && !(x > x_grid[i - 1])) {
      throw Error(ErrorKind::kDomain, "x grid must be strictly increasing");
    }
    const LogFValue f = LogFEval(spec, x, tail_tol);
    report.points.push_back({x, f.value, (1 - x) * f.value});
  }
  const long double last = report.points.back().scaled;
  if (report.target != 0) {
    report.relative_deviation =
        std::fabs(last - report.target) / report.target;
  }
  report.band = band.value_or(RelativeBand(
      report.target, kAbelianBandTolerance, kZeroTargetCeiling));
  report.pass = report.band.Contains(last);
  return report;
}

TauberianProbeReport TauberianProbe(const PartSetSpec& spec,
                                    long double target,
                                    const std::vector<uint64_t>& grid,
                                    std::optional<Band> band) {
  if (grid.empty()) throw Error(ErrorKind::kDomain, "n grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw Error(ErrorKind::kDomain,
                  "n grid must be strictly increasing and positive");
    }
  }
  TauberianProbeReport report;
  report.spec = spec;
  report.target = target;
  const CountingTable counts(spec, grid.back());
  for (uint64_t n : grid) {
    Rational s = SbViaCountingIdentity(counts, n);
    Rational ratio = s / Rational(static_cast<unsigned long>(n));
    report.points.push_back({n, std::move(s), RationalToLongDouble(ratio)});
  }
  const long double last = report.points.back().ratio;
  if (target != 0) {
    report.relative_deviation = std::fabs(last - target) / std::fabs(target);
  }
  report.band = band.value_or(
      RelativeBand(target, kTauberianBandTolerance, kZeroTargetCeiling));
  report.pass = report.band.Contains(last);
  return report;
}

}  // namespace partlab
