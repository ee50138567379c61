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

// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Tolerances and runtime limits are fixed here and are not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.h"
#include "partlab/genfun.h"
#include "partlab/growth.h"
#include "partlab/part_set.h"
#include "partlab/partition_table.h"

namespace partlab {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 means no limit stated
  std::function<Outcome()> check;
};

constexpr long double kPi = std::numbers::pi_v<long double>;

std::vector<PartSetSpec> OracleFamily() {
  return {MakeAll(),           MakeFinite({1, 2}),     MakeFinite({2, 3}),
          MakeFinite({1, 2, 3}), MakeResidues(2, {1}), MakeResidues(4, {1, 3}),
          MakeCofinite(3),     MakePrimes()};
}

std::string Str(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6Lf", v);
  return buf;
}

Outcome OracleEquivalence() {
  Outcome out;
  for (const auto& spec : OracleFamily()) {
    const auto table = PartitionTableDp(spec, 30);
    const auto parts = testing::MembersByPredicate(spec, 30);
    for (uint64_t n = 0; n <= 30; ++n) {
      std::vector<uint64_t> usable;
      for (uint64_t a : parts) {
        if (a <= n) usable.push_back(a);
      }
      if (table[n] != PartitionCountBruteforce(usable, n)) {
        out.Fail(ToString(spec) + " differs at n=" + std::to_string(n));
      }
    }
  }
  if (out.pass) out.detail = "8 sets, n <= 30, all equal";
  return out;
}

Outcome PentagonalCrossCheck() {
  Outcome out;
  const auto dp = PartitionTableDp(MakeAll(), 5000);
  const auto pent = UnrestrictedTablePentagonal(5000);
  for (uint64_t n = 0; n <= 5000; ++n) {
    if (dp[n] != pent[n]) out.Fail("differs at n=" + std::to_string(n));
  }
  if (pent[100] != 190569292) out.Fail("p(100) = " + pent[100].get_str());
  if (out.pass) out.detail = "5001 entries equal, p(100) = 190569292";
  return out;
}

Outcome LemmaSuite() {
  Outcome out;
  std::size_t checks = 0;
  for (const auto& spec : OracleFamily()) {
    const auto table = PartitionTableDp(spec, 2000);
    for (uint64_t n0 = 1; n0 <= 20; ++n0) {
      if (table[n0] < 1) continue;
      ++checks;
      if (!CheckShiftMonotonicity(table, n0).holds) {
        out.Fail("shift fails for " + ToString(spec) + " n0=" +
                 std::to_string(n0));
      }
    }
    const uint64_t a1 = EnumerateParts(spec, 2000).front();
    BigInt running_max = 0;
    for (uint64_t x = 0; x <= 2000; ++x) {
      if (table[x] > running_max) running_max = table[x];
      if (x < a1) continue;
      const uint64_t u = WindowMaxLocation(table, a1, x);
      ++checks;
      if (!(x - a1 < u && u <= x) || table[u] != running_max) {
        out.Fail("window max fails for " + ToString(spec) + " x=" +
                 std::to_string(x));
      }
    }
  }
  for (uint64_t n0 : {1, 2, 3, 5}) {
    ++checks;
    if (!CheckCofiniteMonotonicity(n0, 200).holds) {
      out.Fail("cofinite monotonicity fails for n0=" + std::to_string(n0));
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks hold";
  return out;
}

Outcome FiniteSetLaw() {
  Outcome out;
  for (const auto& spec : {MakeFinite({1, 2}), MakeFinite({1, 2, 3})}) {
    const auto table = PartitionTableDp(spec, 2000);
    const long double rho2000 = FiniteSetLeadingRatio(table, 2000).value;
    const long double rho500 = FiniteSetLeadingRatio(table, 500).value;
    if (!(rho2000 >= 0.95L && rho2000 <= 1.05L)) {
      out.Fail(ToString(spec) + " rho(2000) = " + Str(rho2000));
    }
    if (!(std::fabs(rho2000 - 1) < std::fabs(rho500 - 1))) {
      out.Fail(ToString(spec) + " error does not shrink");
    }
    if (!out.detail.empty() && out.pass) out.detail += "; ";
    if (out.pass) {
      out.detail += ToString(spec) + " rho(500)=" + Str(rho500) +
                    " rho(2000)=" + Str(rho2000);
    }
  }
  return out;
}

Outcome GrowthLawAll() {
  Outcome out;
  const auto table = UnrestrictedTablePentagonal(50000);
  const auto series = GrowthRatioSeries(table, {1000, 10000, 50000});
  const long double r1 = *series.ratios[0];
  const long double r2 = *series.ratios[1];
  const long double r3 = *series.ratios[2];
  if (!(r1 < r2 && r2 < r3)) out.Fail("not strictly increasing");
  if (!(r2 > 0.90L && r2 < 1.00L)) out.Fail("r(1e4) outside (0.90, 1.00)");
  if (!(r3 > 0.95L && r3 < 1.00L)) out.Fail("r(5e4) outside (0.95, 1.00)");
  out.detail = "r = " + Str(r1) + ", " + Str(r2) + ", " + Str(r3) +
               (out.pass ? "" : " (" + out.detail + ")");
  return out;
}

Outcome DirectDensityHalf() {
  Outcome out;
  const auto table = PartitionTableDp(MakeResidues(2, {1}), 20000);
  const auto series = GrowthRatioSeries(table, {2000, 10000, 20000});
  const long double a = *series.ratios[0];
  const long double b = *series.ratios[1];
  const long double c = *series.ratios[2];
  const long double target = std::sqrt(0.5L);
  if (!(a < b && b < c)) out.Fail("not increasing");
  if (!(std::fabs(c - target) / target < 0.10L)) out.Fail("r(2e4) not within 10%");
  out.detail = "r = " + Str(a) + ", " + Str(b) + ", " + Str(c) +
               " vs sqrt(1/2) = " + Str(target);
  return out;
}

Outcome DensityZeroPrimes() {
  Outcome out;
  const auto table = PartitionTableDp(MakePrimes(), 20000);
  const auto series = GrowthRatioSeries(table, {2000, 10000, 20000});
  const long double a = *series.ratios[0];
  const long double b = *series.ratios[1];
  const long double c = *series.ratios[2];
  if (!(c > 0)) out.Fail("nonpositive ratio");
  if (!(a > b && b > c)) out.Fail("not strictly decreasing");
  out.detail = "r = " + Str(a) + ", " + Str(b) + ", " + Str(c);
  return out;
}

Outcome MobiusRoundTrip() {
  Outcome out;
  for (const auto& spec : {MakeAll(), MakeResidues(2, {1}), MakeResidues(4, {1, 3}),
                           MakeFinite({1, 2, 3}), MakePrimes()}) {
    const RoundTripReport report = CheckMobiusRoundTrip(spec, 2000);
    if (!report.inversion_exact) {
      out.Fail(ToString(spec) + " inversion mismatch at n=" +
               std::to_string(*report.first_inversion_mismatch));
    }
    if (!report.identity_exact) {
      out.Fail(ToString(spec) + " identity mismatch at n=" +
               std::to_string(*report.first_identity_mismatch));
    }
  }
  if (out.pass) out.detail = "5 sets, n <= 2000, exact";
  return out;
}

Outcome AbelianTauberian() {
  Outcome out;
  const long double target = kPi * kPi / 12;
  const long double x = 1 - std::ldexp(1.0L, -14);
  const auto abelian = AbelianProbe(MakeResidues(2, {1}), Rational(1, 2), {x});
  const long double scaled = abelian.points.back().scaled;
  const long double abel_dev = std::fabs(scaled - target) / target;
  if (!(abel_dev < 0.02L)) out.Fail("(1-x) log f(x) not within 2%");
  const auto tauberian = TauberianProbe(MakeResidues(2, {1}), target, {100000});
  const long double ratio = tauberian.points.back().ratio;
  const long double taub_dev = std::fabs(ratio - target) / target;
  if (!(taub_dev < 0.01L)) out.Fail("S_B(n)/n not within 1%");
  out.detail = "(1-x)log f = " + Str(scaled) + ", S_B(1e5)/1e5 = " + Str(ratio) +
               ", target " + Str(target);
  return out;
}

Outcome GcdNormalization() {
  Outcome out;
  const PartSetSpec spec = MakeFinite({4, 6});
  const GcdResult g = GcdOfSet(spec, 24);
  if (g.value != 2 || !g.stable) out.Fail("gcd({4,6}) not 2");
  const PartSetSpec reduced = NormalizeByGcd(spec, 2);
  const auto table = PartitionTableDp(reduced, 12);
  const std::vector<uint64_t> parts = {4, 6};
  for (uint64_t n = 0; n <= 24; ++n) {
    const BigInt direct = PartitionCountBruteforce(parts, n);
    if (ScaledCount(table, 2, n) != direct) {
      out.Fail("mismatch at n=" + std::to_string(n));
    }
    if (n % 2 == 1 && direct != 0) out.Fail("odd n with nonzero count");
  }
  if (out.pass) out.detail = "n <= 24 match, odd n are zero";
  return out;
}

}  // namespace
}  // namespace partlab

int main() {
  using namespace partlab;
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence (exact)", 10, OracleEquivalence},
      {2, "pentagonal cross-check (exact)", 60, PentagonalCrossCheck},
      {3, "lemma suite (exact)", 0, LemmaSuite},
      {4, "finite-set polynomial law", 5, FiniteSetLaw},
      {5, "growth law for all parts", 180, GrowthLawAll},
      {6, "direct theorem at density 1/2", 300, DirectDensityHalf},
      {7, "density-zero theorem (primes)", 300, DensityZeroPrimes},
      {8, "Mobius inversion round-trip (exact)", 60, MobiusRoundTrip},
      {9, "abelian/tauberian probes", 60, AbelianTauberian},
      {10, "gcd normalization (exact)", 0, GcdNormalization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.time_limit_s > 0 && seconds > c.time_limit_s) {
      outcome.Fail("took " + std::to_string(seconds) + " s, limit " +
                   std::to_string(c.time_limit_s) + " s");
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] AC%-2d %-38s %7.2fs  %s\n", outcome.pass ? "PASS" : "FAIL",
                c.id, c.name.c_str(), seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
