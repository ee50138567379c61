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

#ifndef PARTLAB_EXPORT_H_
#define PARTLAB_EXPORT_H_

#include <ostream>
#include <string>
#include <vector>

#include "partlab/genfun.h"
#include "partlab/growth.h"
#include "partlab/part_set.h"
#include "partlab/partition_table.h"

namespace partlab {

// CSV and JSON renderings of every report type. Big integers and rationals
// are written as decimal strings in JSON so no value is truncated by a
// double-based reader. Absent values are empty CSV fields and JSON nulls.

// Shortest round-trip decimal for v, always with a '.' or exponent
// ("0.0", "0.7432664983286153").
std::string FormatFloat(long double v);

void WriteCsv(std::ostream& out, const PartitionTable& table);
void WriteJson(std::ostream& out, const PartitionTable& table);

void WriteCsv(std::ostream& out, const DensityProfile& profile);
void WriteJson(std::ostream& out, const DensityProfile& profile,
               const PartSetSpec& spec);

void WriteCsv(std::ostream& out, const GrowthSeries& series);
void WriteJson(std::ostream& out, const GrowthSeries& series);

struct FiniteRatioRow {
  uint64_t n = 0;
  FiniteSetRatio ratio;
};
void WriteCsv(std::ostream& out, const std::vector<FiniteRatioRow>& rows);
void WriteJson(std::ostream& out, const std::vector<FiniteRatioRow>& rows,
               const PartSetSpec& spec);

void WriteCsv(std::ostream& out, const DirectProbeReport& report);
void WriteJson(std::ostream& out, const DirectProbeReport& report);

void WriteCsv(std::ostream& out, const CoefficientSeries& series);
void WriteJson(std::ostream& out, const CoefficientSeries& series);

void WriteCsv(std::ostream& out, const RoundTripReport& report);
void WriteJson(std::ostream& out, const RoundTripReport& report);

// Plain log f(x) tabulation without a target.
void WriteCsv(std::ostream& out, const std::vector<AbelianPoint>& points);
void WriteJson(std::ostream& out, const std::vector<AbelianPoint>& points,
               const PartSetSpec& spec);

void WriteCsv(std::ostream& out, const AbelianProbeReport& report);
void WriteJson(std::ostream& out, const AbelianProbeReport& report);

void WriteCsv(std::ostream& out, const TauberianProbeReport& report);
void WriteJson(std::ostream& out, const TauberianProbeReport& report);

void WriteCsv(std::ostream& out, const std::vector<NamedLemmaCheck>& checks);
void WriteJson(std::ostream& out, const std::vector<NamedLemmaCheck>& checks,
               const PartSetSpec& spec);

}  // namespace partlab

#endif  // PARTLAB_EXPORT_H_
