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

#include "command.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "partlab/error.h"
#include "partlab/export.h"
#include "partlab/genfun.h"
#include "partlab/growth.h"
#include "partlab/partition_table.h"

namespace partlab::cli {
namespace {

struct OptionRule {
  std::set<std::string> required;
  std::set<std::string> optional;
};

const std::map<std::string, OptionRule>& Rules() {
  static const std::map<std::string, OptionRule> kRules = {
      {"table", {{"set", "limit"}, {}}},
      {"pentagonal", {{"limit"}, {}}},
      {"density", {{"set", "grid"}, {}}},
      {"ratio", {{"set", "grid"}, {}}},
      {"finite-asym", {{"set", "grid"}, {}}},
      {"direct-probe", {{"set", "alpha", "grid"}, {"beta", "band"}}},
      {"arithpro-probe", {{"set", "grid"}, {"band"}}},
      {"sb", {{"set", "limit"}, {}}},
      {"invert", {{"set", "limit"}, {}}},
      {"genfun", {{"set", "x-grid"}, {"tol", "alpha", "band"}}},
      {"tauberian-probe", {{"set", "grid"}, {"alpha", "target", "band"}}},
      {"check-lemmas", {{"set", "limit"}, {"n0-max"}}},
  };
  return kRules;
}

const std::map<std::string, std::string>& OptionHelp() {
  static const std::map<std::string, std::string> kHelp = {
      {"set", "part set: all | finite:a,b,.. | mod:M:r,.. | cofinite:N0 | "
              "primes | file:PATH"},
      {"limit", "largest n to compute"},
      {"grid", "n grid: list:n1,n2,.. | geo:start:stop:factor"},
      {"x-grid", "x grid in (0,1): list:x1,x2,.. | near1:k1:k2 (x = 1-2^-k)"},
      {"alpha", "density alpha as p/q or decimal"},
      {"beta", "upper density beta (defaults to alpha)"},
      {"target", "explicit S_B(n)/n target (instead of pi^2 alpha/6)"},
      {"band", "acceptance band lo,hi overriding the default"},
      {"tol", "tail tolerance for log f(x) (default 1e-12)"},
      {"n0-max", "largest shift n0 for shift monotonicity (default 20)"},
  };
  return kHelp;
}

struct RawOptions {
  std::map<std::string, std::string> values;
  std::string format = "csv";
  std::string out;
};

void RequireOneOf(const CommandRequest& r) {
  if (r.subcommand == "tauberian-probe" && r.alpha.has_value() == r.c.has_value()) {
    throw UsageError("tauberian-probe needs exactly one of --alpha or --target");
  }
  if (r.subcommand == "arithpro-probe" &&
      !std::holds_alternative<ResidueParts>(*r.set)) {
    throw UsageError("arithpro-probe needs a mod:M:r1,... set");
  }
}

std::string FormatRationalArg(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : RationalToString(q);
}

}  // namespace

bool operator==(const CommandRequest& a, const CommandRequest& b) {
  return a.subcommand == b.subcommand && a.set == b.set && a.limit == b.limit &&
         a.grid == b.grid && a.x_grid == b.x_grid && a.alpha == b.alpha &&
         a.beta == b.beta && a.c == b.c &&
         a.band.has_value() == b.band.has_value() &&
         (!a.band || (a.band->lo == b.band->lo && a.band->hi == b.band->hi)) &&
         a.tol == b.tol && a.n0_max == b.n0_max && a.format == b.format &&
         a.out == b.out;
}

std::string HelpText() {
  std::ostringstream help;
  help << "usage: partlab <subcommand> [options] [--format csv|json] "
          "[--out PATH]\n\nsubcommands:\n";
  for (const auto& name : Subcommands()) {
    const OptionRule& rule = Rules().at(name);
    help << "  " << name;
    for (const auto& o : rule.required) help << " --" << o << " V";
    for (const auto& o : rule.optional) help << " [--" << o << " V]";
    help << '\n';
  }
  help << "\noptions:\n";
  for (const auto& [name, text] : OptionHelp()) {
    help << "  --" << name << ": " << text << '\n';
  }
  help << "\nexit status: 0 success or probe PASS, 1 probe FAIL, 2 usage or "
          "input error\n";
  return help.str();
}

CommandRequest ParseRequest(const std::vector<std::string>& args) {
  CLI::App app{"partlab"};
  app.set_help_flag();
  app.require_subcommand(1);
  RawOptions raw;
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : Subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->set_help_flag();
    const OptionRule& rule = Rules().at(name);
    auto add = [&](const std::string& opt, bool required) {
      auto* o = sub->add_option("--" + opt, raw.values[opt], OptionHelp().at(opt));
      if (required) o->required();
    };
    for (const auto& o : rule.required) add(o, true);
    for (const auto& o : rule.optional) add(o, false);
    sub->add_option("--format", raw.format)->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", raw.out);
    subs[name] = sub;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CommandRequest request;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) request.subcommand = name;
  }
  const CLI::App* sub = subs.at(request.subcommand);
  auto given = [&](const std::string& opt) {
    return sub->get_option_no_throw("--" + opt) != nullptr &&
           sub->count("--" + opt) > 0;
  };
  if (given("set")) request.set = ParseSetSpec(raw.values["set"]);
  if (given("limit")) request.limit = ParseUint(raw.values["limit"], "--limit");
  if (given("grid")) request.grid = ParseGridSpec(raw.values["grid"]);
  if (given("x-grid")) request.x_grid = ParseXGridSpec(raw.values["x-grid"]);
  if (given("alpha")) request.alpha = ParseRational(raw.values["alpha"]);
  if (given("beta")) request.beta = ParseRational(raw.values["beta"]);
  if (given("target")) request.c = ParseDouble(raw.values["target"], "--target");
  if (given("band")) request.band = ParseBand(raw.values["band"]);
  if (given("tol")) request.tol = ParseDouble(raw.values["tol"], "--tol");
  if (given("n0-max")) request.n0_max = ParseUint(raw.values["n0-max"], "--n0-max");
  request.format = raw.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  if (sub->count("--out") > 0) request.out = raw.out;
  RequireOneOf(request);
  return request;
}

std::vector<std::string> FormatRequest(const CommandRequest& r) {
  std::vector<std::string> args = {r.subcommand};
  auto push = [&](const std::string& flag, const std::string& value) {
    args.push_back("--" + flag);
    args.push_back(value);
  };
  if (r.set) push("set", ToString(*r.set));
  if (r.limit) push("limit", std::to_string(*r.limit));
  if (r.grid) push("grid", r.grid->text);
  if (r.x_grid) push("x-grid", r.x_grid->text);
  if (r.alpha) push("alpha", FormatRationalArg(*r.alpha));
  if (r.beta) push("beta", FormatRationalArg(*r.beta));
  if (r.c) push("target", FormatFloat(*r.c));
  if (r.band) push("band", FormatBand(*r.band));
  if (r.tol) push("tol", FormatFloat(*r.tol));
  if (r.n0_max) push("n0-max", std::to_string(*r.n0_max));
  push("format", r.format == OutputFormat::kJson ? "json" : "csv");
  if (r.out) push("out", *r.out);
  return args;
}

namespace {

template <class Report, class... Extra>
void Emit(std::ostream& out, OutputFormat format, const Report& report,
          const Extra&... extra) {
  if (format == OutputFormat::kJson) {
    WriteJson(out, report, extra...);
  } else {
    WriteCsv(out, report);
  }
}

int Verdict(bool pass) { return pass ? kExitOk : kExitProbeFail; }

int Dispatch(const CommandRequest& r, std::ostream& out, std::ostream& err) {
  const std::string& cmd = r.subcommand;
  const OutputFormat fmt = r.format;
  if (cmd == "table") {
    Emit(out, fmt, PartitionTableDp(*r.set, *r.limit));
    return kExitOk;
  }
  if (cmd == "pentagonal") {
    Emit(out, fmt, UnrestrictedTablePentagonal(*r.limit));
    return kExitOk;
  }
  if (cmd == "density") {
    Emit(out, fmt, ComputeDensityProfile(*r.set, r.grid->values), *r.set);
    return kExitOk;
  }
  if (cmd == "ratio") {
    const PartitionTable table = BuildPartitionTable(*r.set, r.grid->values.back());
    Emit(out, fmt, GrowthRatioSeries(table, r.grid->values));
    return kExitOk;
  }
  if (cmd == "finite-asym") {
    const PartitionTable table = PartitionTableDp(*r.set, r.grid->values.back());
    std::vector<FiniteRatioRow> rows;
    for (uint64_t n : r.grid->values) {
      rows.push_back({n, FiniteSetLeadingRatio(table, n)});
    }
    Emit(out, fmt, rows, *r.set);
    return kExitOk;
  }
  if (cmd == "direct-probe") {
    const auto report = DirectTheoremProbe(*r.set, *r.alpha,
                                           r.beta.value_or(*r.alpha),
                                           r.grid->values, r.band);
    Emit(out, fmt, report);
    err << "direct-probe: " << (report.pass ? "PASS" : "FAIL") << '\n';
    return Verdict(report.pass);
  }
  if (cmd == "arithpro-probe") {
    const auto& residues = std::get<ResidueParts>(*r.set);
    const auto report = ArithProgressionProbe(
        residues.modulus, residues.residues, r.grid->values, r.band);
    Emit(out, fmt, report);
    err << "arithpro-probe: " << (report.pass ? "PASS" : "FAIL") << '\n';
    return Verdict(report.pass);
  }
  if (cmd == "sb") {
    Emit(out, fmt, BCoefficients(*r.set, *r.limit));
    return kExitOk;
  }
  if (cmd == "invert") {
    const RoundTripReport report = CheckMobiusRoundTrip(*r.set, *r.limit);
    Emit(out, fmt, report);
    return Verdict(report.pass());
  }
  if (cmd == "genfun") {
    const long double tol = r.tol.value_or(kDefaultLogFTolerance);
    const std::vector<long double> xs(r.x_grid->values.begin(),
                                      r.x_grid->values.end());
    if (!r.alpha) {
      std::vector<AbelianPoint> points;
      for (long double x : xs) {
        const LogFValue f = LogFEval(*r.set, x, tol);
        points.push_back({x, f.value, (1 - x) * f.value});
      }
      Emit(out, fmt, points, *r.set);
      return kExitOk;
    }
    const auto report = AbelianProbe(*r.set, *r.alpha, xs, r.band, tol);
    Emit(out, fmt, report);
    err << "abelian probe: " << (report.pass ? "PASS" : "FAIL") << '\n';
    return Verdict(report.pass);
  }
  if (cmd == "tauberian-probe") {
    const long double target = r.c ? static_cast<long double>(*r.c)
                                   : DensityConstant(*r.alpha);
    const auto report = TauberianProbe(*r.set, target, r.grid->values, r.band);
    Emit(out, fmt, report);
    err << "tauberian-probe: " << (report.pass ? "PASS" : "FAIL") << '\n';
    return Verdict(report.pass);
  }
  if (cmd == "check-lemmas") {
    const PartitionTable table = PartitionTableDp(*r.set, *r.limit);
    const auto checks = RunLemmaSuite(table, r.n0_max.value_or(20));
    Emit(out, fmt, checks, *r.set);
    bool all = true;
    for (const auto& c : checks) all = all && c.check.holds;
    return Verdict(all);
  }
  err << "unknown subcommand '" << cmd << "'\n" << HelpText();
  return kExitUsage;
}

}  // namespace

int Run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  try {
    if (request.out) {
      std::ofstream file(*request.out);
      if (!file) {
        err << "partlab: cannot open " << *request.out << " for writing\n";
        return kExitUsage;
      }
      return Dispatch(request, file, err);
    }
    return Dispatch(request, out, err);
  } catch (const Error& e) {
    err << "partlab: " << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  if (args.empty()) {
    out << HelpText();
    return kExitUsage;
  }
  const bool wants_help =
      args[0] == "help" ||
      std::any_of(args.begin(), args.end(), [](const std::string& a) {
        return a == "--help" || a == "-h";
      });
  if (wants_help) {
    out << HelpText();
    return kExitOk;
  }
  CommandRequest request;
  try {
    request = ParseRequest(args);
  } catch (const UsageError& e) {
    err << "partlab: " << e.what() << "\n\n" << HelpText();
    return kExitUsage;
  } catch (const Error& e) {
    err << "partlab: " << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return Run(request, out, err);
}

}  // namespace partlab::cli
