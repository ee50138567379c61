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

#include "partlab/export.h"

#include <charconv>
#include <cmath>
#include <string>

#include "json.hpp"

namespace partlab {
namespace {

using nlohmann::json;

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string OptionalFloat(const std::optional<long double>& v) {
  return v ? FormatFloat(*v) : std::string();
}

json FloatJson(long double v) {
  if (!std::isfinite(v)) return nullptr;
  return static_cast<double>(v);
}

json OptionalFloatJson(const std::optional<long double>& v) {
  return v ? FloatJson(*v) : json(nullptr);
}

json OptionalIndexJson(const std::optional<uint64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json BandJson(const Band& band) {
  return {{"lo", FloatJson(band.lo)},
          {"hi", FloatJson(band.hi)},
          {"source", band.user_supplied ? "user" : "default-extrapolated"}};
}

void Emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

std::string FormatFloat(long double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), static_cast<double>(v));
  std::string s(buffer, ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void WriteCsv(std::ostream& out, const PartitionTable& table) {
  out << "n,p_A(n)\n";
  for (uint64_t n = 0; n <= table.limit(); ++n) {
    out << n << ',' << table[n].get_str() << '\n';
  }
}

void WriteJson(std::ostream& out, const PartitionTable& table) {
  json values = json::array();
  for (const BigInt& v : table.values()) values.push_back(v.get_str());
  Emit(out, {{"set", ToString(table.spec())},
             {"limit", table.limit()},
             {"values", std::move(values)}});
}

void WriteCsv(std::ostream& out, const DensityProfile& profile) {
  out << "x,ratio,ratio_value,tail_min,tail_max\n";
  for (std::size_t i = 0; i < profile.grid.size(); ++i) {
    out << profile.grid[i] << ',' << RationalToString(profile.ratios[i]) << ','
        << FormatFloat(RationalToLongDouble(profile.ratios[i])) << ','
        << RationalToString(profile.tail_min[i]) << ','
        << RationalToString(profile.tail_max[i]) << '\n';
  }
}

void WriteJson(std::ostream& out, const DensityProfile& profile,
               const PartSetSpec& spec) {
  json rows = json::array();
  for (std::size_t i = 0; i < profile.grid.size(); ++i) {
    rows.push_back(
        {{"x", profile.grid[i]},
         {"ratio", RationalToString(profile.ratios[i])},
         {"ratio_value", FloatJson(RationalToLongDouble(profile.ratios[i]))},
         {"tail_min", RationalToString(profile.tail_min[i])},
         {"tail_max", RationalToString(profile.tail_max[i])}});
  }
  Emit(out, {{"set", ToString(spec)}, {"rows", std::move(rows)}});
}

void WriteCsv(std::ostream& out, const GrowthSeries& series) {
  out << "n,ratio\n";
  for (std::size_t i = 0; i < series.grid.size(); ++i) {
    out << series.grid[i] << ',' << OptionalFloat(series.ratios[i]) << '\n';
  }
}

void WriteJson(std::ostream& out, const GrowthSeries& series) {
  json rows = json::array();
  for (std::size_t i = 0; i < series.grid.size(); ++i) {
    rows.push_back(
        {{"n", series.grid[i]}, {"ratio", OptionalFloatJson(series.ratios[i])}});
  }
  Emit(out, {{"set", ToString(series.spec)}, {"rows", std::move(rows)}});
}

void WriteCsv(std::ostream& out, const std::vector<FiniteRatioRow>& rows) {
  out << "n,rho,rho_value\n";
  for (const auto& row : rows) {
    out << row.n << ',' << RationalToString(row.ratio.exact) << ','
        << FormatFloat(row.ratio.value) << '\n';
  }
}

void WriteJson(std::ostream& out, const std::vector<FiniteRatioRow>& rows,
               const PartSetSpec& spec) {
  json items = json::array();
  for (const auto& row : rows) {
    items.push_back({{"n", row.n},
                     {"rho", RationalToString(row.ratio.exact)},
                     {"rho_value", FloatJson(row.ratio.value)}});
  }
  Emit(out, {{"set", ToString(spec)}, {"rows", std::move(items)}});
}

void WriteCsv(std::ostream& out, const DirectProbeReport& report) {
  out << "n,ratio,in_tail,target_lower,target_upper,band_lo,band_hi\n";
  const auto& s = report.series;
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    out << s.grid[i] << ',' << OptionalFloat(s.ratios[i]) << ','
        << (i >= report.tail_begin ? 1 : 0) << ','
        << FormatFloat(report.target_lower) << ','
        << FormatFloat(report.target_upper) << ',' << FormatFloat(report.band.lo)
        << ',' << FormatFloat(report.band.hi) << '\n';
  }
}

void WriteJson(std::ostream& out, const DirectProbeReport& report) {
  json rows = json::array();
  const auto& s = report.series;
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    rows.push_back({{"n", s.grid[i]},
                    {"ratio", OptionalFloatJson(s.ratios[i])},
                    {"in_tail", i >= report.tail_begin}});
  }
  Emit(out, {{"set", ToString(s.spec)},
             {"alpha", RationalToString(report.alpha)},
             {"beta", RationalToString(report.beta)},
             {"target_lower", FloatJson(report.target_lower)},
             {"target_upper", FloatJson(report.target_upper)},
             {"rows", std::move(rows)},
             {"tail_min", OptionalFloatJson(report.tail_min)},
             {"tail_max", OptionalFloatJson(report.tail_max)},
             {"tail_trend", TrendName(report.tail_trend)},
             {"band", BandJson(report.band)},
             {"requires_decreasing_tail", report.requires_decreasing_tail},
             {"verdict", report.pass ? "PASS" : "FAIL"}});
}

void WriteCsv(std::ostream& out, const CoefficientSeries& series) {
  out << "l,b,S_B\n";
  for (uint64_t l = 1; l <= series.limit(); ++l) {
    out << l << ',' << RationalToString(series.b(l)) << ','
        << RationalToString(series.s(l)) << '\n';
  }
}

void WriteJson(std::ostream& out, const CoefficientSeries& series) {
  json rows = json::array();
  for (uint64_t l = 1; l <= series.limit(); ++l) {
    rows.push_back({{"l", l},
                    {"b", RationalToString(series.b(l))},
                    {"S_B", RationalToString(series.s(l))}});
  }
  Emit(out, {{"set", ToString(series.spec())},
             {"limit", series.limit()},
             {"rows", std::move(rows)}});
}

namespace {

std::string RoundTripSummary(const RoundTripReport& report) {
  if (report.pass()) {
    return "exact match at all n ≤ " + std::to_string(report.limit);
  }
  std::string s = "mismatch";
  if (report.first_inversion_mismatch) {
    s += " inversion at n = " + std::to_string(*report.first_inversion_mismatch);
  }
  if (report.first_identity_mismatch) {
    s += " identity at n = " + std::to_string(*report.first_identity_mismatch);
  }
  return s;
}

std::string OptionalIndex(const std::optional<uint64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

void WriteCsv(std::ostream& out, const RoundTripReport& report) {
  out << "set,limit,inversion_exact,identity_exact,first_inversion_mismatch,"
         "first_identity_mismatch,summary\n";
  out << CsvField(ToString(report.spec)) << ',' << report.limit << ','
      << report.inversion_exact << ',' << report.identity_exact << ','
      << OptionalIndex(report.first_inversion_mismatch) << ','
      << OptionalIndex(report.first_identity_mismatch) << ','
      << CsvField(RoundTripSummary(report)) << '\n';
}

void WriteJson(std::ostream& out, const RoundTripReport& report) {
  Emit(out,
       {{"set", ToString(report.spec)},
        {"limit", report.limit},
        {"inversion_exact", report.inversion_exact},
        {"identity_exact", report.identity_exact},
        {"first_inversion_mismatch",
         OptionalIndexJson(report.first_inversion_mismatch)},
        {"first_identity_mismatch",
         OptionalIndexJson(report.first_identity_mismatch)},
        {"summary", RoundTripSummary(report)}});
}

void WriteCsv(std::ostream& out, const std::vector<AbelianPoint>& points) {
  out << "x,log_f,scaled\n";
  for (const auto& p : points) {
    out << FormatFloat(p.x) << ',' << FormatFloat(p.log_f) << ','
        << FormatFloat(p.scaled) << '\n';
  }
}

void WriteJson(std::ostream& out, const std::vector<AbelianPoint>& points,
               const PartSetSpec& spec) {
  json rows = json::array();
  for (const auto& p : points) {
    rows.push_back({{"x", FloatJson(p.x)},
                    {"log_f", FloatJson(p.log_f)},
                    {"scaled", FloatJson(p.scaled)}});
  }
  Emit(out, {{"set", ToString(spec)}, {"rows", std::move(rows)}});
}

void WriteCsv(std::ostream& out, const AbelianProbeReport& report) {
  out << "x,log_f,scaled,target\n";
  for (const auto& p : report.points) {
    out << FormatFloat(p.x) << ',' << FormatFloat(p.log_f) << ','
        << FormatFloat(p.scaled) << ',' << FormatFloat(report.target) << '\n';
  }
}

void WriteJson(std::ostream& out, const AbelianProbeReport& report) {
  json rows = json::array();
  for (const auto& p : report.points) {
    rows.push_back({{"x", FloatJson(p.x)},
                    {"log_f", FloatJson(p.log_f)},
                    {"scaled", FloatJson(p.scaled)}});
  }
  Emit(out, {{"set", ToString(report.spec)},
             {"alpha", RationalToString(report.alpha)},
             {"target", FloatJson(report.target)},
             {"rows", std::move(rows)},
             {"relative_deviation", OptionalFloatJson(report.relative_deviation)},
             {"band", BandJson(report.band)},
             {"verdict", report.pass ? "PASS" : "FAIL"}});
}

void WriteCsv(std::ostream& out, const TauberianProbeReport& report) {
  out << "n,S_B,ratio,target\n";
  for (const auto& p : report.points) {
    out << p.n << ',' << RationalToString(p.s) << ',' << FormatFloat(p.ratio)
        << ',' << FormatFloat(report.target) << '\n';
  }
}

void WriteJson(std::ostream& out, const TauberianProbeReport& report) {
  json rows = json::array();
  for (const auto& p : report.points) {
    rows.push_back({{"n", p.n},
                    {"S_B", RationalToString(p.s)},
                    {"ratio", FloatJson(p.ratio)}});
  }
  Emit(out, {{"set", ToString(report.spec)},
             {"target", FloatJson(report.target)},
             {"rows", std::move(rows)},
             {"relative_deviation", OptionalFloatJson(report.relative_deviation)},
             {"band", BandJson(report.band)},
             {"verdict", report.pass ? "PASS" : "FAIL"}});
}

void WriteCsv(std::ostream& out, const std::vector<NamedLemmaCheck>& checks) {
  out << "check,holds,first_violation,detail\n";
  for (const auto& c : checks) {
    out << CsvField(c.name) << ',' << c.check.holds << ','
        << OptionalIndex(c.check.first_violation) << ','
        << CsvField(c.check.detail) << '\n';
  }
}

void WriteJson(std::ostream& out, const std::vector<NamedLemmaCheck>& checks,
               const PartSetSpec& spec) {
  json rows = json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.check.holds;
    rows.push_back({{"check", c.name},
                    {"holds", c.check.holds},
                    {"first_violation", OptionalIndexJson(c.check.first_violation)},
                    {"detail", c.check.detail}});
  }
  Emit(out, {{"set", ToString(spec)},
             {"checks", std::move(rows)},
             {"verdict", all ? "PASS" : "FAIL"}});
}

}  // namespace partlab
