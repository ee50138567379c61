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

#ifndef PARTLAB_PROBE_H_
#define PARTLAB_PROBE_H_

#include <optional>
#include <span>
#include <string_view>

namespace partlab {

// Closed acceptance interval for a probed quantity. Asymptotic statements
// are only ever checked as bands at named finite points.
struct Band {
  long double lo = 0;
  long double hi = 0;
  // False when the band came from a library default. Defaults are
  // extrapolated from leading-order asymptotics and known second-order
  // terms, not from any stated convergence rate.
  bool user_supplied = false;

  bool Contains(long double v) const { return lo <= v && v <= hi; }
};

enum class Trend { kIncreasing, kDecreasing, kFlat, kMixed };

std::string_view TrendName(Trend trend);

// Strict monotonicity of a sequence; fewer than two values is kFlat.
Trend ClassifyTrend(std::span<const long double> values);

// [target·(1 - rel), target·(1 + rel)], or [0, zero_ceiling] when the
// target is zero.
Band RelativeBand(long double target, long double rel,
                  long double zero_ceiling);

inline constexpr long double kZeroTargetCeiling = 0.01L;

}  // namespace partlab

#endif  // PARTLAB_PROBE_H_
