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

#ifndef PARTLAB_GROWTH_H_
#define PARTLAB_GROWTH_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "partlab/bigint.h"
#include "partlab/part_set.h"
#include "partlab/partition_table.h"
#include "partlab/probe.h"

namespace partlab {

// c0 = π·sqrt(2/3), the constant in log p(n) ~ c0·sqrt(n).
long double C0();

// r(n) = log p_A(n) / (c0·sqrt(n)) sampled on a grid. Entries with
// p_A(n) = 0 are absent.
struct GrowthSeries {
  PartSetSpec spec;
  std::vector<uint64_t> grid;
  std::vector<std::optional<long double>> ratios;
};

// grid must be strictly increasing, >= 1 and within the table limit.
GrowthSeries GrowthRatioSeries(const PartitionTable& table,
                               const std::vector<uint64_t>& grid);

struct FiniteSetRatio {
  Rational exact;  // p_A(n)·(k-1)!·∏a / n^(k-1)
  long double value = 0;
};

// Normalized leading-term ratio for a finite, relatively prime set; tends
// to 1 with error O(1/n). Throws kUnsupported for infinite specs and
// kPrecondition when gcd(A) != 1.
FiniteSetRatio FiniteSetLeadingRatio(const PartitionTable& table, uint64_t n);

// Default relative half-width of the direct-probe band around sqrt(α),
// sqrt(β).
inline constexpr long double kDirectBandTolerance = 0.10L;

struct DirectProbeReport {
  GrowthSeries series;
  Rational alpha;
  Rational beta;
  long double target_lower = 0;  // sqrt(α)
  long double target_upper = 0;  // sqrt(β)
  // Summary over the last third of the grid (at least one point).
  std::size_t tail_begin = 0;
  std::optional<long double> tail_min;
  std::optional<long double> tail_max;
  Trend tail_trend = Trend::kFlat;
  Band band;
  // For β = 0 the verdict additionally requires the tail to be positive and
  // strictly decreasing, the finite-scale reading of log p_A(n) = o(sqrt n).
  bool requires_decreasing_tail = false;
  bool pass = false;
};

// Checks the tail of r(n) against the band [0.9·sqrt(α), 1.1·sqrt(β)] or the
// caller's band. Requires 0 <= α <= β <= 1 and gcd(A) = 1 (kPrecondition,
// with a hint to normalize first).
DirectProbeReport DirectTheoremProbe(const PartSetSpec& spec,
                                     const Rational& alpha,
                                     const Rational& beta,
                                     const std::vector<uint64_t>& grid,
                                     std::optional<Band> band = std::nullopt);

// Same probe with α = β = ℓ/m. The residues must satisfy
// gcd(r_1, ..., r_ℓ, m) = 1.
DirectProbeReport ArithProgressionProbe(
    uint64_t modulus, const std::vector<uint64_t>& residues,
    const std::vector<uint64_t>& grid, std::optional<Band> band = std::nullopt);

}  // namespace partlab

#endif  // PARTLAB_GROWTH_H_
