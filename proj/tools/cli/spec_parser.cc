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

#include "spec_parser.h"

#include <charconv>
#include <cmath>
#include <string>

#include "partlab/error.h"
#include "partlab/export.h"

namespace partlab::cli {
namespace {

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string Join(const std::vector<uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

uint64_t ParseUint(const std::string& text, const std::string& what) {
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::kParse,
                "non-numeric token '" + text + "' in " + what);
  }
  return value;
}

double ParseDouble(const std::string& text, const std::string& what) {
  double value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw Error(ErrorKind::kParse,
                "non-numeric token '" + text + "' in " + what);
  }
  return value;
}

std::vector<uint64_t> ParseUintList(const std::string& text,
                                    const std::string& what) {
  if (text.empty()) throw Error(ErrorKind::kParse, "empty " + what);
  std::vector<uint64_t> values;
  for (const std::string& token : Split(text, ',')) {
    if (token.empty()) {
      throw Error(ErrorKind::kParse, "empty entry in " + what + " '" + text + "'");
    }
    values.push_back(ParseUint(token, what));
  }
  return values;
}

PartSetSpec ParseSetSpec(const std::string& text) {
  if (text.find_first_of(" \t\n") != std::string::npos) {
    throw Error(ErrorKind::kParse, "whitespace in set spec '" + text + "'");
  }
  const std::size_t colon = text.find(':');
  const std::string tag = text.substr(0, colon);
  const std::string body =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);
  const bool has_body = colon != std::string::npos;

  auto no_body = [&](auto make) {
    if (has_body) {
      throw Error(ErrorKind::kParse, "'" + tag + "' takes no arguments");
    }
    return make();
  };
  auto need_body = [&] {
    if (!has_body || body.empty()) {
      throw Error(ErrorKind::kParse, "empty list after '" + tag + ":'");
    }
  };

  if (tag == "all") return no_body(MakeAll);
  if (tag == "primes") return no_body(MakePrimes);
  if (tag == "finite") {
    need_body();
    std::vector<uint64_t> parts = ParseUintList(body, "finite part list");
    for (uint64_t a : parts) {
      if (a == 0) throw Error(ErrorKind::kParse, "part 0 is not positive");
    }
    try {
      return MakeFinite(std::move(parts));
    } catch (const Error& e) {
      throw Error(ErrorKind::kParse, e.what());
    }
  }
  if (tag == "mod") {
    need_body();
    const std::size_t sep = body.find(':');
    if (sep == std::string::npos) {
      throw Error(ErrorKind::kParse, "expected mod:M:r1,r2,... in '" + text + "'");
    }
    const uint64_t modulus = ParseUint(body.substr(0, sep), "modulus");
    if (modulus == 0) throw Error(ErrorKind::kParse, "modulus 0 is not positive");
    const std::string list = body.substr(sep + 1);
    if (list.empty()) {
      throw Error(ErrorKind::kParse, "empty residue list in '" + text + "'");
    }
    std::vector<uint64_t> residues = ParseUintList(list, "residue list");
    for (uint64_t r : residues) {
      if (r == 0) {
        throw Error(ErrorKind::kParse,
                    "residue 0 is out of range; write " +
                        std::to_string(modulus) + " for the zero class");
      }
      if (r > modulus) {
        throw Error(ErrorKind::kParse, "residue " + std::to_string(r) +
                                           " exceeds modulus " +
                                           std::to_string(modulus));
      }
    }
    try {
      return MakeResidues(modulus, std::move(residues));
    } catch (const Error& e) {
      throw Error(ErrorKind::kParse, e.what());
    }
  }
  if (tag == "cofinite") {
    need_body();
    const uint64_t start = ParseUint(body, "cofinite start");
    if (start == 0) {
      throw Error(ErrorKind::kParse, "cofinite start 0 is not positive");
    }
    return MakeCofinite(start);
  }
  if (tag == "file") {
    need_body();
    return LoadPartSetFile(body);
  }
  throw Error(ErrorKind::kParse, "unknown set tag '" + tag + "'");
}

GridSpec ParseGridSpec(const std::string& text) {
  GridSpec grid;
  if (text.rfind("list:", 0) == 0) {
    grid.values = ParseUintList(text.substr(5), "grid list");
    grid.text = "list:" + Join(grid.values);
  } else if (text.rfind("geo:", 0) == 0) {
    const auto fields = Split(text.substr(4), ':');
    if (fields.size() != 3) {
      throw Error(ErrorKind::kParse, "expected geo:start:stop:factor, got '" +
                                         text + "'");
    }
    const uint64_t start = ParseUint(fields[0], "geometric grid start");
    const uint64_t stop = ParseUint(fields[1], "geometric grid stop");
    const double factor = ParseDouble(fields[2], "geometric grid factor");
    if (start == 0 || stop < start || !(factor > 1)) {
      throw Error(ErrorKind::kParse,
                  "geometric grid needs 1 <= start <= stop and factor > 1");
    }
    long double next = static_cast<long double>(start);
    while (true) {
      const uint64_t v = static_cast<uint64_t>(std::llround(next));
      if (v > stop) break;
      if (grid.values.empty() || v > grid.values.back()) grid.values.push_back(v);
      next *= factor;
    }
    if (grid.values.back() != stop) grid.values.push_back(stop);
    grid.text = "geo:" + std::to_string(start) + ":" + std::to_string(stop) +
                ":" + FormatFloat(factor);
  } else {
    throw Error(ErrorKind::kParse,
                "unknown grid '" + text + "'; use list:... or geo:start:stop:factor");
  }
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    if (grid.values[i] == 0 || (i > 0 && grid.values[i] <= grid.values[i - 1])) {
      throw Error(ErrorKind::kParse,
                  "grid values must be positive and strictly increasing");
    }
  }
  return grid;
}

XGridSpec ParseXGridSpec(const std::string& text) {
  XGridSpec grid;
  if (text.rfind("list:", 0) == 0) {
    const std::string body = text.substr(5);
    if (body.empty()) throw Error(ErrorKind::kParse, "empty x grid");
    grid.text = "list:";
    for (const std::string& token : Split(body, ',')) {
      const double x = ParseDouble(token, "x grid");
      if (!grid.values.empty()) grid.text += ',';
      grid.text += FormatFloat(x);
      grid.values.push_back(x);
    }
  } else if (text.rfind("near1:", 0) == 0) {
    const auto fields = Split(text.substr(6), ':');
    if (fields.size() != 2) {
      throw Error(ErrorKind::kParse, "expected near1:k1:k2, got '" + text + "'");
    }
    const uint64_t k1 = ParseUint(fields[0], "near1 start exponent");
    const uint64_t k2 = ParseUint(fields[1], "near1 stop exponent");
    if (k1 == 0 || k2 < k1 || k2 > 60) {
      throw Error(ErrorKind::kParse, "near1 needs 1 <= k1 <= k2 <= 60");
    }
    for (uint64_t k = k1; k <= k2; ++k) {
      grid.values.push_back(1.0 - std::ldexp(1.0, -static_cast<int>(k)));
    }
    grid.text = "near1:" + std::to_string(k1) + ":" + std::to_string(k2);
  } else {
    throw Error(ErrorKind::kParse,
                "unknown x grid '" + text + "'; use list:... or near1:k1:k2");
  }
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const double x = grid.values[i];
    if (!(x > 0 && x < 1) || (i > 0 && x <= grid.values[i - 1])) {
      throw Error(ErrorKind::kParse,
                  "x grid values must lie in (0, 1) and increase");
    }
  }
  return grid;
}

Band ParseBand(const std::string& text) {
  const auto fields = Split(text, ',');
  if (fields.size() != 2) {
    throw Error(ErrorKind::kParse, "expected --band lo,hi, got '" + text + "'");
  }
  const double lo = ParseDouble(fields[0], "band");
  const double hi = ParseDouble(fields[1], "band");
  if (lo > hi) throw Error(ErrorKind::kParse, "band lower end exceeds upper end");
  return Band{lo, hi, true};
}

std::string FormatBand(const Band& band) {
  return FormatFloat(band.lo) + "," + FormatFloat(band.hi);
}

}  // namespace partlab::cli
