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

#include "partlab/probe.h"

#include <cmath>

namespace partlab {

std::string_view TrendName(Trend trend) {
  switch (trend) {
    case Trend::kIncreasing:
      return "increasing";
    case Trend::kDecreasing:
      return "decreasing";
    case Trend::kFlat:
      return "flat";
    case Trend::kMixed:
      return "mixed";
  }
  return "mixed";
}

Trend ClassifyTrend(std::span<const long double> values) {
  if (values.size() < 2) return Trend::kFlat;
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) up = false;
    if (!(values[i] < values[i - 1])) down = false;
  }
  if (up) return Trend::kIncreasing;
  if (down) return Trend::kDecreasing;
  return Trend::kMixed;
}

Band RelativeBand(long double target, long double rel,
                  long double zero_ceiling) {
  if (target == 0) return Band{0, zero_ceiling, false};
  const long double half = std::fabs(target) * rel;
  return Band{target - half, target + half, false};
}

}  // namespace partlab
