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

#ifndef PARTLAB_PARTITION_TABLE_H_
#define PARTLAB_PARTITION_TABLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partlab/bigint.h"
#include "partlab/part_set.h"

namespace partlab {

// Exact values p_A(0..limit). Immutable once built.
class PartitionTable {
 public:
  PartitionTable(PartSetSpec spec, std::vector<BigInt> values);

  const PartSetSpec& spec() const { return spec_; }
  uint64_t limit() const { return values_.size() - 1; }
  std::span<const BigInt> values() const { return values_; }

  // p_A(n) for n <= limit(); throws kOutOfRange beyond the table.
  const BigInt& at(uint64_t n) const;
  const BigInt& operator[](uint64_t n) const { return values_[n]; }

 private:
  PartSetSpec spec_;
  std::vector<BigInt> values_;
};

// Coin-change recurrence over the parts of A ∩ [1, limit], taken in
// increasing order. Truncating A at the limit is exact.
PartitionTable PartitionTableDp(const PartSetSpec& spec, uint64_t limit);

// Same recurrence with the parts fed in the given order.
std::vector<BigInt> PartitionValuesDp(std::span<const uint64_t> parts,
                                      uint64_t limit);

// Largest n accepted by PartitionCountBruteforce.
inline constexpr uint64_t kBruteforceLimit = 40;

// Counts partitions of n by walking every nonincreasing sequence of parts.
// `parts` must be ascending; throws kGuard for n > kBruteforceLimit.
BigInt PartitionCountBruteforce(std::span<const uint64_t> parts, uint64_t n);

// p(0..limit) from Euler's pentagonal-number recurrence.
PartitionTable UnrestrictedTablePentagonal(uint64_t limit);

// Table for any spec using the fastest exact route: the pentagonal
// recurrence for All, the coin-change DP otherwise.
PartitionTable BuildPartitionTable(const PartSetSpec& spec, uint64_t limit);

// p_A(n) where A = d·A' and `reduced` is the table of A'. Zero off the
// multiples of d. Throws kOutOfRange if n/d exceeds the table.
BigInt ScaledCount(const PartitionTable& reduced, uint64_t d, uint64_t n);

struct LemmaCheck {
  bool holds = true;
  // First n at which the checked inequality fails.
  std::optional<uint64_t> first_violation;
  std::string detail;
};

// p_A(n + n0) >= p_A(n) for every n with n + n0 <= limit. Throws
// kPrecondition when p_A(n0) = 0 and kOutOfRange when n0 > limit.
LemmaCheck CheckShiftMonotonicity(const PartitionTable& table, uint64_t n0);

// A u in (x - a1, x] attaining max{p_A(n) : 0 <= n <= x}; the largest such
// u when several n attain the max. Requires a1 <= x <= limit.
uint64_t WindowMaxLocation(const PartitionTable& table, uint64_t a1,
                           uint64_t x);

// Runs WindowMaxLocation for every x in [a1, limit] and verifies the window
// and the max.
LemmaCheck CheckWindowMaxLemma(const PartitionTable& table, uint64_t a1);

// Nondecreasing within each residue class mod `step`.
LemmaCheck CheckCongruenceMonotonicity(const PartitionTable& table,
                                       uint64_t step);

// Builds the table of {n >= n0} up to `limit` and checks it is
// nondecreasing for n >= 1 and strictly increasing from 3*n0 + 2 on.
// Throws kPrecondition when limit < 3*n0 + 3.
LemmaCheck CheckCofiniteMonotonicity(uint64_t n0, uint64_t limit);

struct NamedLemmaCheck {
  std::string name;  // e.g. "shift n0=3"
  LemmaCheck check;
};

// Shift monotonicity for every n0 <= n0_max with p_A(n0) >= 1, the window
// max lemma for a1 = min(A), congruence monotonicity mod a1, and, for
// cofinite specs, the cofinite monotonicity check.
std::vector<NamedLemmaCheck> RunLemmaSuite(const PartitionTable& table,
                                           uint64_t n0_max);

}  // namespace partlab

#endif  // PARTLAB_PARTITION_TABLE_H_
