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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "partlab/error.h"

namespace partlab {
namespace {

using ::testing::ElementsAre;

Rational Q(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

constexpr long double kPi = std::numbers::pi_v<long double>;

std::vector<PartSetSpec> Family() {
  return {MakeAll(),          MakeResidues(2, {1}), MakeResidues(4, {1, 3}),
          MakeFinite({1, 2, 3}), MakePrimes(),      MakeFinite({2}),
          MakeCofinite(4),    MakeResidues(6, {6})};
}

TEST(MobiusSieveTest, Examples) {
  const MobiusTable mu = MobiusSieve(30);
  EXPECT_EQ(mu(1), 1);
  EXPECT_EQ(mu(2), -1);
  EXPECT_EQ(mu(3), -1);
  EXPECT_EQ(mu(4), 0);
  EXPECT_EQ(mu(30), -1);
  int sum = 0;
  for (uint64_t d : {1, 2, 3, 4, 6, 12}) sum += mu(d);
  EXPECT_EQ(sum, 0);
  EXPECT_THROW(MobiusSieve(0), Error);
}

TEST(MobiusSieveTest, MatchesFactorizationAndDivisorSums) {
  const uint64_t limit = 5000;
  const MobiusTable mu = MobiusSieve(limit);
  std::vector<int> divisor_sum(limit + 1, 0);
  for (uint64_t d = 1; d <= limit; ++d) {
    ASSERT_EQ(mu(d), testing::MobiusByFactorization(d)) << d;
    for (uint64_t m = d; m <= limit; m += d) divisor_sum[m] += mu(d);
  }
  EXPECT_EQ(divisor_sum[1], 1);
  for (uint64_t n = 2; n <= limit; ++n) ASSERT_EQ(divisor_sum[n], 0) << n;
}

TEST(BCoefficientsTest, Examples) {
  const auto ones = BCoefficients(MakeFinite({1}), 3);
  EXPECT_EQ(ones.b(1), Q(1, 1));
  EXPECT_EQ(ones.b(2), Q(1, 2));
  EXPECT_EQ(ones.b(3), Q(1, 3));
  EXPECT_EQ(ones.s(3), Q(11, 6));
  const auto twos = BCoefficients(MakeFinite({2}), 4);
  EXPECT_EQ(twos.b(1), Q(0, 1));
  EXPECT_EQ(twos.b(2), Q(1, 1));
  EXPECT_EQ(twos.b(3), Q(0, 1));
  EXPECT_EQ(twos.b(4), Q(1, 2));
  const auto odd = BCoefficients(MakeResidues(2, {1}), 4);
  EXPECT_EQ(odd.b(1), Q(1, 1));
  EXPECT_EQ(odd.b(2), Q(1, 2));
  EXPECT_EQ(odd.b(3), Q(4, 3));
  EXPECT_EQ(odd.b(4), Q(1, 4));
  EXPECT_EQ(odd.s(0), Q(0, 1));
}

TEST(BCoefficientsTest, MatchesDivisorPairOracle) {
  for (const auto& spec : Family()) {
    const auto series = BCoefficients(spec, 300);
    for (uint64_t l = 1; l <= 300; ++l) {
      ASSERT_EQ(series.b(l), testing::BByDivisorPairs(spec, l))
          << ToString(spec) << " l=" << l;
      ASSERT_EQ(series.s(l), series.s(l - 1) + series.b(l));
      ASSERT_GE(series.b(l), 0);
      if (testing::IsMember(spec, l)) ASSERT_GE(series.b(l), 1);
    }
  }
}

TEST(BCoefficientsTest, GuardsAndRange) {
  EXPECT_THROW(BCoefficients(MakeAll(), 0), Error);
  EXPECT_THROW(BCoefficients(MakeAll(), 1'000'000), Error);
  const auto series = BCoefficients(MakeAll(), 5);
  EXPECT_THROW(series.b(0), Error);
  EXPECT_THROW(series.s(6), Error);
}

TEST(SbViaCountingIdentityTest, Examples) {
  EXPECT_EQ(SbViaCountingIdentity(MakeFinite({1}), 3), Q(11, 6));
  EXPECT_EQ(SbViaCountingIdentity(MakeFinite({2}), 4), Q(3, 2));
  EXPECT_EQ(SbViaCountingIdentity(MakeResidues(2, {1}), 1), Q(1, 1));
  // Cross-check against the b prefix 0 + 1 + 0 + 1/2.
  EXPECT_EQ(BCoefficients(MakeFinite({2}), 4).s(4), Q(3, 2));
}

TEST(SbViaCountingIdentityTest, AgreesWithPrefixSums) {
  for (const auto& spec : Family()) {
    const auto series = BCoefficients(spec, 400);
    for (uint64_t n = 1; n <= 400; ++n) {
      ASSERT_EQ(SbViaCountingIdentity(spec, n), series.s(n))
          << ToString(spec) << " n=" << n;
    }
  }
}

TEST(MobiusInvertSbTest, Examples) {
  EXPECT_EQ(MobiusInvertSb(BCoefficients(MakeFinite({1}), 5), 5), Q(1, 1));
  EXPECT_EQ(MobiusInvertSb(BCoefficients(MakeFinite({2}), 4), 4), Q(1, 1));
  for (const auto& spec : Family()) {
    const auto series = BCoefficients(spec, 10);
    EXPECT_EQ(MobiusInvertSb(series, 1), series.s(1));
  }
}

TEST(MobiusInvertSbTest, RoundTripsCountingFunction) {
  for (const auto& spec : Family()) {
    const auto series = BCoefficients(spec, 500);
    const MobiusInverter inverter(series);
    for (uint64_t n = 1; n <= 500; ++n) {
      ASSERT_EQ(inverter.Invert(n),
                Rational(static_cast<unsigned long>(CountingFunction(spec, n))))
          << ToString(spec) << " n=" << n;
    }
    EXPECT_THROW(inverter.Invert(501), Error);
  }
}

TEST(MobiusRoundTripTest, ReportsPass) {
  const auto report = CheckMobiusRoundTrip(MakeResidues(2, {1}), 100);
  EXPECT_TRUE(report.pass());
  EXPECT_FALSE(report.first_inversion_mismatch.has_value());
}

TEST(LogFEvalTest, Examples) {
  EXPECT_NEAR(LogFEval(MakeFinite({1}), 0.5L, 0).value, std::log(2.0L), 1e-18L);
  EXPECT_NEAR(LogFEval(MakeFinite({1, 2}), 0.5L, 0).value,
              std::log(2.0L) + std::log(4.0L / 3.0L), 1e-18L);
  const LogFValue all = LogFEval(MakeAll(), 0.9L, 1e-15L);
  EXPECT_LE(all.tail_bound, 1e-15L);
  const long double oracle = testing::LogFAllDoubleSeries(0.9L);
  // mpmath: 13.563921496294533764.
  EXPECT_NEAR(oracle, 13.563921496294533764L, 1e-15L);
  EXPECT_LE(all.value, oracle + 1e-15L);
  EXPECT_GE(all.value, oracle - 1e-15L - 1e-14L);
}

TEST(LogFEvalTest, DomainErrors) {
  for (long double x : {0.0L, 1.0L, -0.5L, 1.5L, std::nanl("")}) {
    EXPECT_THROW(LogFEval(MakeFinite({1}), x, 0), Error);
  }
  EXPECT_THROW(LogFEval(MakeAll(), 0.5L, 0), Error);
}

TEST(LogFEvalTest, IncreasingInX) {
  for (const auto& spec : Family()) {
    long double previous = -1;
    for (long double x : {0.1L, 0.3L, 0.5L, 0.7L, 0.9L, 0.99L}) {
      const long double v = LogFEval(spec, x, 1e-12L).value;
      EXPECT_GT(v, previous) << ToString(spec) << " x=" << x;
      previous = v;
    }
  }
}

TEST(AbelianProbeTest, Examples) {
  const long double x = 1 - std::ldexp(1.0L, -14);
  const auto all = AbelianProbe(MakeAll(), Q(1, 1), {x});
  // Double series sum_m x^m / (m (1 - x^m)), 1.5e6 terms: 1.6445316357275355.
  EXPECT_NEAR(all.points.back().scaled, 1.6445316357275355L, 1e-12L);
  EXPECT_LT(*all.relative_deviation, 0.01L);
  EXPECT_TRUE(all.pass);

  const auto odd = AbelianProbe(MakeResidues(2, {1}), Q(1, 2), {0.9L, 0.99L, x});
  // Double series sum_m x^m / (m (1 - x^{2m})): 0.8224207804488207.
  EXPECT_NEAR(odd.points.back().scaled, 0.8224207804488207L, 1e-12L);
  EXPECT_NEAR(odd.target, kPi * kPi / 12, 1e-18L);
  EXPECT_LT(*odd.relative_deviation, 0.02L);
  EXPECT_TRUE(odd.pass);

  const auto one = AbelianProbe(MakeFinite({1}), Q(0, 1), {0.999L});
  EXPECT_NEAR(one.points.back().scaled, 0.0069077552789821370L, 1e-15L);
  EXPECT_FALSE(one.relative_deviation.has_value());
  EXPECT_TRUE(one.pass);
}

TEST(AbelianProbeTest, ForcedFailAndBadGrid) {
  EXPECT_FALSE(
      AbelianProbe(MakeAll(), Q(1, 1), {0.99L}, Band{5, 6, true}).pass);
  EXPECT_THROW(AbelianProbe(MakeAll(), Q(1, 1), {0.9L, 0.5L}), Error);
}

TEST(TauberianProbeTest, Examples) {
  const auto odd = TauberianProbe(MakeResidues(2, {1}), kPi * kPi / 12, {100000});
  // Python float sum: 0.8224644538049908.
  EXPECT_NEAR(odd.points.back().ratio, 0.8224644538049908L, 1e-12L);
  EXPECT_LT(*odd.relative_deviation, 0.01L);
  EXPECT_TRUE(odd.pass);

  const auto one = TauberianProbe(MakeFinite({1}), 0, {10000});
  // H_10000 / 10000 from exact Python fractions.
  EXPECT_NEAR(one.points.back().ratio, 0.0009787606036044383L, 1e-17L);
  EXPECT_TRUE(one.pass);

  const auto all = TauberianProbe(MakeAll(), kPi * kPi / 6, {1000, 100000});
  EXPECT_NEAR(all.points.back().ratio, 1.6448764768833224L, 1e-12L);
  EXPECT_TRUE(all.pass);
}

}  // namespace
}  // namespace partlab
