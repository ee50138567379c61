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

#include "partlab/partition_table.h"

#include <algorithm>
#include <string>
#include <utility>

#include "partlab/error.h"

namespace partlab {

PartitionTable::PartitionTable(PartSetSpec spec, std::vector<BigInt> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorKind::kDomain, "partition table needs p_A(0)");
  }
}

const BigInt& PartitionTable::at(uint64_t n) const {
  if (n > limit()) {
    throw Error(ErrorKind::kOutOfRange,
                "n = " + std::to_string(n) + " beyond table limit " +
                    std::to_string(limit()));
  }
  return values_[n];
}

std::vector<BigInt> PartitionValuesDp(std::span<const uint64_t> parts,
                                      uint64_t limit) {
  std::vector<BigInt> values(limit + 1);
  values[0] = 1;
  for (uint64_t a : parts) {
    if (a == 0 || a > limit) continue;
    for (uint64_t n = a; n <= limit; ++n) {
      mpz_add(values[n].get_mpz_t(), values[n].get_mpz_t(),
              values[n - a].get_mpz_t());
    }
  }
  return values;
}

PartitionTable PartitionTableDp(const PartSetSpec& spec, uint64_t limit) {
  const std::vector<uint64_t> parts = EnumerateParts(spec, limit);
  return PartitionTable(spec, PartitionValuesDp(parts, limit));
}

namespace {

// Partitions of `remaining` whose parts are drawn from parts[0..top] in
// nonincreasing order; each leaf is one partition.
uint64_t CountNonincreasing(std::span<const uint64_t> parts, uint64_t remaining,
                            std::size_t top) {
  if (remaining == 0) return 1;
  uint64_t count = 0;
  for (std::size_t i = top + 1; i-- > 0;) {
    if (parts[i] <= remaining) {
      count += CountNonincreasing(parts, remaining - parts[i], i);
    }
  }
  return count;
}

}  // namespace

BigInt PartitionCountBruteforce(std::span<const uint64_t> parts, uint64_t n) {
  if (n > kBruteforceLimit) {
    throw Error(ErrorKind::kGuard,
                "brute-force enumeration limited to n <= " +
                    std::to_string(kBruteforceLimit) + ", got " +
                    std::to_string(n));
  }
  if (!std::is_sorted(parts.begin(), parts.end())) {
    throw Error(ErrorKind::kPrecondition, "parts must be sorted ascending");
  }
  if (n == 0) return 1;
  if (parts.empty()) return 0;
  // p(40) = 37338, so the leaf count always fits in 64 bits.
  return BigInt(static_cast<unsigned long>(
      CountNonincreasing(parts, n, parts.size() - 1)));
}

PartitionTable UnrestrictedTablePentagonal(uint64_t limit) {
  std::vector<BigInt> p(limit + 1);
  p[0] = 1;
  for (uint64_t n = 1; n <= limit; ++n) {
    BigInt& sum = p[n];
    for (uint64_t k = 1;; ++k) {
      const uint64_t first = k * (3 * k - 1) / 2;
      if (first > n) break;
      const uint64_t second = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        mpz_add(sum.get_mpz_t(), sum.get_mpz_t(), p[n - first].get_mpz_t());
        if (second <= n) {
          mpz_add(sum.get_mpz_t(), sum.get_mpz_t(), p[n - second].get_mpz_t());
        }
      } else {
        mpz_sub(sum.get_mpz_t(), sum.get_mpz_t(), p[n - first].get_mpz_t());
        if (second <= n) {
          mpz_sub(sum.get_mpz_t(), sum.get_mpz_t(), p[n - second].get_mpz_t());
        }
      }
    }
  }
  return PartitionTable(MakeAll(), std::move(p));
}

PartitionTable BuildPartitionTable(const PartSetSpec& spec, uint64_t limit) {
  if (std::holds_alternative<AllParts>(spec)) {
    return UnrestrictedTablePentagonal(limit);
  }
  return PartitionTableDp(spec, limit);
}

BigInt ScaledCount(const PartitionTable& reduced, uint64_t d, uint64_t n) {
  if (d == 0) throw Error(ErrorKind::kDomain, "scale factor must be positive");
  if (n % d != 0) return 0;
  return reduced.at(n / d);
}

LemmaCheck CheckShiftMonotonicity(const PartitionTable& table, uint64_t n0) {
  const BigInt& anchor = table.at(n0);
  if (sgn(anchor) <= 0) {
    throw Error(ErrorKind::kPrecondition,
                "shift monotonicity needs p_A(n0) >= 1, but p_A(" +
                    std::to_string(n0) + ") = 0");
  }
  const uint64_t limit = table.limit();
  for (uint64_t n = 0; n + n0 <= limit; ++n) {
    if (table[n + n0] < table[n]) {
      return {false, n,
              "p_A(" + std::to_string(n + n0) + ") < p_A(" + std::to_string(n) +
                  ")"};
    }
  }
  return {true, std::nullopt,
          "p_A(n+" + std::to_string(n0) + ") >= p_A(n) for n <= " +
              std::to_string(limit - n0)};
}

uint64_t WindowMaxLocation(const PartitionTable& table, uint64_t a1,
                           uint64_t x) {
  if (a1 == 0 || x < a1) {
    throw Error(ErrorKind::kPrecondition, "window max needs 1 <= a1 <= x");
  }
  table.at(x);
  uint64_t best = 0;
  for (uint64_t n = 1; n <= x; ++n) {
    if (table[n] >= table[best]) best = n;
  }
  return best;
}

LemmaCheck CheckWindowMaxLemma(const PartitionTable& table, uint64_t a1) {
  if (a1 == 0 || a1 > table.limit()) {
    throw Error(ErrorKind::kPrecondition,
                "window max lemma needs 1 <= a1 <= limit");
  }
  // Running argmax over [0, x]; ties move to the later index, matching
  // WindowMaxLocation.
  uint64_t best = 0;
  for (uint64_t n = 1; n < a1; ++n) {
    if (table[n] >= table[best]) best = n;
  }
  for (uint64_t x = a1; x <= table.limit(); ++x) {
    if (table[x] >= table[best]) best = x;
    if (best + a1 <= x) {
      return {false, x,
              "max over [0, " + std::to_string(x) + "] first attained at " +
                  std::to_string(best) + ", outside (x - a1, x]"};
    }
  }
  return {true, std::nullopt,
          "window (x - " + std::to_string(a1) + ", x] holds the max for x <= " +
              std::to_string(table.limit())};
}

LemmaCheck CheckCongruenceMonotonicity(const PartitionTable& table,
                                       uint64_t step) {
  if (step == 0) throw Error(ErrorKind::kDomain, "step must be positive");
  for (uint64_t n = step; n <= table.limit(); ++n) {
    if (table[n] < table[n - step]) {
      return {false, n,
              "p_A(" + std::to_string(n) + ") < p_A(" +
                  std::to_string(n - step) + ")"};
    }
  }
  return {true, std::nullopt,
          "nondecreasing in every class mod " + std::to_string(step)};
}

LemmaCheck CheckCofiniteMonotonicity(uint64_t n0, uint64_t limit) {
  if (n0 == 0) throw Error(ErrorKind::kDomain, "n0 must be positive");
  if (limit < 3 * n0 + 3) {
    throw Error(ErrorKind::kPrecondition,
                "cofinite check needs limit >= 3*n0 + 3 = " +
                    std::to_string(3 * n0 + 3));
  }
  const PartitionTable table = PartitionTableDp(MakeCofinite(n0), limit);
  const uint64_t strict_from = 3 * n0 + 2;
  for (uint64_t n = 1; n < limit; ++n) {
    if (table[n + 1] < table[n]) {
      return {false, n,
              "p_A(" + std::to_string(n + 1) + ") < p_A(" + std::to_string(n) +
                  ")"};
    }
    if (n >= strict_from && table[n + 1] == table[n]) {
      return {false, n,
              "p_A(" + std::to_string(n + 1) + ") = p_A(" + std::to_string(n) +
                  ") past " + std::to_string(strict_from)};
    }
  }
  return {true, std::nullopt,
          "nondecreasing from 1, strictly increasing from " +
              std::to_string(strict_from)};
}

std::vector<NamedLemmaCheck> RunLemmaSuite(const PartitionTable& table,
                                           uint64_t n0_max) {
  std::vector<NamedLemmaCheck> checks;
  const uint64_t limit = table.limit();
  for (uint64_t n0 = 1; n0 <= std::min(n0_max, limit); ++n0) {
    if (sgn(table[n0]) > 0) {
      checks.push_back({"shift n0=" + std::to_string(n0),
                        CheckShiftMonotonicity(table, n0)});
    }
  }
  const std::vector<uint64_t> first = EnumerateParts(table.spec(), limit);
  if (!first.empty()) {
    const uint64_t a1 = first.front();
    checks.push_back({"window-max a1=" + std::to_string(a1),
                      CheckWindowMaxLemma(table, a1)});
    checks.push_back({"congruence mod " + std::to_string(a1),
                      CheckCongruenceMonotonicity(table, a1)});
  }
  if (const auto* c = std::get_if<CofiniteParts>(&table.spec());
      c != nullptr && limit >= 3 * c->start + 3) {
    checks.push_back({"cofinite n0=" + std::to_string(c->start),
                      CheckCofiniteMonotonicity(c->start, limit)});
  }
  return checks;
}

}  // namespace partlab
