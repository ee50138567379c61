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

#ifndef PARTLAB_TOOLS_CLI_COMMAND_H_
#define PARTLAB_TOOLS_CLI_COMMAND_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "partlab/bigint.h"
#include "partlab/part_set.h"
#include "partlab/probe.h"
#include "spec_parser.h"

namespace partlab::cli {

enum class OutputFormat { kCsv, kJson };

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitProbeFail = 1;
inline constexpr int kExitUsage = 2;

// Subcommands, in help order.
inline const std::vector<std::string>& Subcommands() {
  static const std::vector<std::string> kNames = {
      "table",        "pentagonal",     "density", "ratio",
      "finite-asym",  "direct-probe",   "arithpro-probe",
      "sb",           "invert",         "genfun",  "tauberian-probe",
      "check-lemmas"};
  return kNames;
}

struct CommandRequest {
  std::string subcommand;
  std::optional<PartSetSpec> set;
  std::optional<uint64_t> limit;
  std::optional<GridSpec> grid;
  std::optional<XGridSpec> x_grid;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::optional<double> c;
  std::optional<Band> band;
  std::optional<double> tol;
  std::optional<uint64_t> n0_max;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::string> out;

  friend bool operator==(const CommandRequest& a, const CommandRequest& b);
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// args excludes the program name. Throws UsageError (with help text) for
// CLI-level problems and partlab::Error for malformed values.
CommandRequest ParseRequest(const std::vector<std::string>& args);

// Inverse of ParseRequest up to canonical spelling.
std::vector<std::string> FormatRequest(const CommandRequest& request);

// Executes the request, writing the report to `out` (or the --out file) and
// diagnostics to `err`. Returns one of the kExit* codes.
int Run(const CommandRequest& request, std::ostream& out, std::ostream& err);

// Full command-line entry point.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

std::string HelpText();

}  // namespace partlab::cli

#endif  // PARTLAB_TOOLS_CLI_COMMAND_H_
