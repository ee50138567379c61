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

#include "partlab/part_set.h"

#include <filesystem>
#include <fstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "partlab/error.h"

namespace partlab {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

Rational Q(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

TEST(EnumeratePartsTest, Examples) {
  EXPECT_THAT(EnumerateParts(MakeResidues(2, {1}), 10), ElementsAre(1, 3, 5, 7, 9));
  EXPECT_THAT(EnumerateParts(MakeFinite({2, 3}), 10), ElementsAre(2, 3));
  EXPECT_THAT(EnumerateParts(MakePrimes(), 12), ElementsAre(2, 3, 5, 7, 11));
}

TEST(EnumeratePartsTest, PrimesMatchTrialDivision) {
  EXPECT_EQ(EnumerateParts(MakePrimes(), 5000),
            testing::MembersByPredicate(MakePrimes(), 5000));
}

TEST(EnumeratePartsTest, ZeroClassResidueIsTheModulus) {
  EXPECT_THAT(EnumerateParts(MakeResidues(3, {3}), 10), ElementsAre(3, 6, 9));
  EXPECT_THAT(EnumerateParts(MakeResidues(1, {1}), 4), ElementsAre(1, 2, 3, 4));
}

TEST(EnumeratePartsTest, CofiniteBelowStartIsEmpty) {
  EXPECT_TRUE(EnumerateParts(MakeCofinite(5), 4).empty());
  EXPECT_THAT(EnumerateParts(MakeCofinite(5), 7), ElementsAre(5, 6, 7));
}

TEST(CountingFunctionTest, Examples) {
  EXPECT_EQ(CountingFunction(MakeResidues(2, {1}), 10), 5u);
  EXPECT_EQ(CountingFunction(MakeCofinite(5), 12), 8u);
  for (const auto& spec : {MakeAll(), MakePrimes(), MakeFinite({1, 4}),
                           MakeResidues(4, {1, 3}), MakeCofinite(2)}) {
    EXPECT_EQ(CountingFunction(spec, 0), 0u) << ToString(spec);
  }
}

TEST(CountingTableTest, AgreesWithCountingFunction) {
  const auto spec = MakeResidues(6, {1, 5, 6});
  const CountingTable table(spec, 200);
  for (uint64_t x = 0; x <= 200; ++x) {
    EXPECT_EQ(table(x), CountingFunction(spec, x)) << x;
  }
}

TEST(MakeSpecTest, RejectsInvalidLists) {
  EXPECT_THROW(MakeFinite({}), Error);
  EXPECT_THROW(MakeFinite({3, 2}), Error);
  EXPECT_THROW(MakeFinite({0, 2}), Error);
  EXPECT_THROW(MakeFinite({2, 2}), Error);
  EXPECT_THROW(MakeResidues(4, {5}), Error);
  EXPECT_THROW(MakeResidues(0, {1}), Error);
  EXPECT_THROW(MakeResidues(4, {}), Error);
  EXPECT_THROW(MakeCofinite(0), Error);
}

TEST(GcdOfSetTest, Examples) {
  const GcdResult a = GcdOfSet(MakeFinite({4, 6}), 10);
  EXPECT_EQ(a.value, 2u);
  EXPECT_TRUE(a.stable);
  const GcdResult b = GcdOfSet(MakeResidues(2, {1}), 10);
  EXPECT_EQ(b.value, 1u);
  EXPECT_TRUE(b.stable);
  const GcdResult c = GcdOfSet(MakeFinite({6, 10, 15}), 20);
  EXPECT_EQ(c.value, 1u);
  EXPECT_TRUE(c.stable);
}

TEST(GcdOfSetTest, UnstableUntilEnoughIsSeen) {
  // Only 6 is visible; 10 and 15 are not yet.
  const GcdResult partial = GcdOfSet(MakeFinite({6, 10, 15}), 9);
  EXPECT_EQ(partial.value, 6u);
  EXPECT_FALSE(partial.stable);
  // 2, 6 seen, which covers residue 2 and one period.
  const GcdResult residues = GcdOfSet(MakeResidues(4, {2}), 6);
  EXPECT_EQ(residues.value, 2u);
  EXPECT_TRUE(residues.stable);
  EXPECT_FALSE(GcdOfSet(MakeResidues(4, {2}), 5).stable);
}

TEST(GcdOfSetTest, EmptyIntersectionIsDomainError) {
  try {
    GcdOfSet(MakeCofinite(10), 5);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
}

TEST(NormalizeByGcdTest, Examples) {
  EXPECT_EQ(NormalizeByGcd(MakeFinite({4, 6}), 2), MakeFinite({2, 3}));
  EXPECT_EQ(NormalizeByGcd(MakeFinite({3, 5}), 1), MakeFinite({3, 5}));
  EXPECT_EQ(NormalizeByGcd(MakeResidues(4, {2}), 2), MakeResidues(2, {1}));
}

TEST(NormalizeByGcdTest, Errors) {
  try {
    NormalizeByGcd(MakeFinite({4, 5}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
  try {
    NormalizeByGcd(MakeCofinite(2), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupported);
  }
  EXPECT_EQ(NormalizeByGcd(MakePrimes(), 1), MakePrimes());
}

TEST(NormalizeByGcdTest, ScalingBackReproducesEnumeration) {
  for (const auto& [spec, d] :
       std::vector<std::pair<PartSetSpec, uint64_t>>{
           {MakeFinite({4, 6, 10}), 2},
           {MakeResidues(6, {3, 6}), 3},
           {MakeResidues(12, {4, 8}), 4}}) {
    const auto reduced = EnumerateParts(NormalizeByGcd(spec, d), 100 / d);
    std::vector<uint64_t> scaled;
    for (uint64_t a : reduced) scaled.push_back(a * d);
    EXPECT_EQ(scaled, EnumerateParts(spec, (100 / d) * d)) << ToString(spec);
  }
}

TEST(DensityProfileTest, Examples) {
  const auto odd = ComputeDensityProfile(MakeResidues(2, {1}), {10, 100, 1000});
  EXPECT_THAT(odd.ratios, ElementsAre(Q(1, 2), Q(1, 2), Q(1, 2)));
  const auto finite = ComputeDensityProfile(MakeFinite({1, 2, 3}), {10, 100});
  EXPECT_THAT(finite.ratios, ElementsAre(Q(3, 10), Q(3, 100)));
  // 25 primes below 100 by trial division.
  ASSERT_EQ(testing::MembersByPredicate(MakePrimes(), 100).size(), 25u);
  const auto primes = ComputeDensityProfile(MakePrimes(), {100});
  EXPECT_THAT(primes.ratios, ElementsAre(Q(25, 100)));
}

TEST(DensityProfileTest, TailSummaries) {
  const auto profile = ComputeDensityProfile(MakeFinite({1, 2, 3}), {1, 2, 10});
  // Ratios are 1, 1, 3/10.
  EXPECT_THAT(profile.tail_min, ElementsAre(Q(3, 10), Q(3, 10), Q(3, 10)));
  EXPECT_THAT(profile.tail_max, ElementsAre(Q(1, 1), Q(1, 1), Q(3, 10)));
}

TEST(DensityProfileTest, ResidueRatioIsExactOnMultiplesOfModulus) {
  const auto profile =
      ComputeDensityProfile(MakeResidues(12, {1, 5, 7, 11}), {12, 120, 1200});
  for (const auto& r : profile.ratios) EXPECT_EQ(r, Q(1, 3));
}

TEST(DensityProfileTest, RejectsBadGrid) {
  EXPECT_THROW(ComputeDensityProfile(MakeAll(), {}), Error);
  EXPECT_THROW(ComputeDensityProfile(MakeAll(), {5, 5}), Error);
  EXPECT_THROW(ComputeDensityProfile(MakeAll(), {0, 5}), Error);
}

TEST(FilePartsTest, ParsesAndSorts) {
  const auto spec = ParseFileParts("5\n\n2\n  3 \n", "mem");
  EXPECT_EQ(std::get<FileParts>(spec).elements, (std::vector<uint64_t>{2, 3, 5}));
  EXPECT_EQ(CountingFunction(spec, 4), 2u);
  EXPECT_TRUE(IsFinite(spec));
}

TEST(FilePartsTest, DiagnosticsNameTheLine) {
  try {
    ParseFileParts("1\n2\nabc\n", "parts.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_THAT(e.what(), HasSubstr("parts.txt:3"));
  }
  EXPECT_THROW(ParseFileParts("1\n0\n", "f"), Error);
  EXPECT_THROW(ParseFileParts("1\n-4\n", "f"), Error);
  EXPECT_THROW(ParseFileParts("\n\n", "f"), Error);
  try {
    ParseFileParts("4\n7\n4\n", "f");
    FAIL();
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), HasSubstr("duplicate part 4"));
  }
}

TEST(FilePartsTest, LoadsFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "partlab_parts.txt";
  {
    std::ofstream f(path);
    f << "3\n5\n";
  }
  const auto spec = LoadPartSetFile(path);
  EXPECT_EQ(ToString(spec), "file:" + path.string());
  EXPECT_THAT(EnumerateParts(spec, 10), ElementsAre(3, 5));
  std::filesystem::remove(path);
  EXPECT_THROW(LoadPartSetFile(path), Error);
}

TEST(ToStringTest, MiniLanguage) {
  EXPECT_EQ(ToString(MakeAll()), "all");
  EXPECT_EQ(ToString(MakeFinite({2, 3})), "finite:2,3");
  EXPECT_EQ(ToString(MakeResidues(4, {1, 3})), "mod:4:1,3");
  EXPECT_EQ(ToString(MakeCofinite(5)), "cofinite:5");
  EXPECT_EQ(ToString(MakePrimes()), "primes");
}

}  // namespace
}  // namespace partlab
