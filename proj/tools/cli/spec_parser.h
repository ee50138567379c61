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

#ifndef PARTLAB_TOOLS_CLI_SPEC_PARSER_H_
#define PARTLAB_TOOLS_CLI_SPEC_PARSER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "partlab/part_set.h"
#include "partlab/probe.h"

namespace partlab::cli {

// Grammar (no whitespace, decimal integers):
//   all | finite:a1,a2,... | mod:M:r1,r2,... | cofinite:N0 | primes | file:PATH
// Throws Error(kParse) naming the offending token.
PartSetSpec ParseSetSpec(const std::string& text);

// Comma-separated positive decimal integers; `what` names the list in
// diagnostics.
std::vector<uint64_t> ParseUintList(const std::string& text,
                                    const std::string& what);
uint64_t ParseUint(const std::string& text, const std::string& what);
double ParseDouble(const std::string& text, const std::string& what);

// Integer sample grid: "list:n1,n2,..." or "geo:start:stop:factor". A
// geometric grid holds start·factor^i rounded to integers while <= stop,
// then stop itself.
struct GridSpec {
  std::string text;  // canonical form
  std::vector<uint64_t> values;
  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.values == b.values;
  }
};
GridSpec ParseGridSpec(const std::string& text);

// Points in (0, 1): "list:x1,x2,..." or "near1:k1:k2" for x = 1 - 2^-k,
// k = k1..k2.
struct XGridSpec {
  std::string text;
  std::vector<double> values;
  friend bool operator==(const XGridSpec& a, const XGridSpec& b) {
    return a.values == b.values;
  }
};
XGridSpec ParseXGridSpec(const std::string& text);

// "lo,hi" with lo <= hi.
Band ParseBand(const std::string& text);
std::string FormatBand(const Band& band);

}  // namespace partlab::cli

#endif  // PARTLAB_TOOLS_CLI_SPEC_PARSER_H_
