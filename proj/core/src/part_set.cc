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

#include "partlab/part_set.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <type_traits>

#include "partlab/error.h"

namespace partlab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string JoinNumbers(const std::vector<uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void RequireStrictlyIncreasingPositive(const std::vector<uint64_t>& values,
                                       std::string_view what) {
  if (values.empty()) {
    throw Error(ErrorKind::kInvalidSpec, std::string(what) + " is empty");
  }
  if (values.front() == 0) {
    throw Error(ErrorKind::kInvalidSpec,
                std::string(what) + " contains 0; parts must be positive");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) {
      throw Error(ErrorKind::kInvalidSpec,
                  std::string(what) + " is not strictly increasing at " +
                      std::to_string(values[i]));
    }
  }
}

std::vector<uint64_t> PrefixOf(const std::vector<uint64_t>& sorted,
                               uint64_t bound) {
  auto end = std::upper_bound(sorted.begin(), sorted.end(), bound);
  return {sorted.begin(), end};
}

uint64_t CountResidues(const ResidueParts& r, uint64_t x) {
  uint64_t count = 0;
  for (uint64_t residue : r.residues) {
    if (x >= residue) count += (x - residue) / r.modulus + 1;
  }
  return count;
}

}  // namespace

PartSetSpec MakeAll() { return AllParts{}; }

PartSetSpec MakeFinite(std::vector<uint64_t> elements) {
  RequireStrictlyIncreasingPositive(elements, "finite part list");
  return FiniteParts{std::move(elements)};
}

PartSetSpec MakeResidues(uint64_t modulus, std::vector<uint64_t> residues) {
  if (modulus == 0) {
    throw Error(ErrorKind::kInvalidSpec, "modulus must be at least 1");
  }
  RequireStrictlyIncreasingPositive(residues, "residue list");
  if (residues.back() > modulus) {
    throw Error(ErrorKind::kInvalidSpec,
                "residue " + std::to_string(residues.back()) +
                    " exceeds modulus " + std::to_string(modulus));
  }
  return ResidueParts{modulus, std::move(residues)};
}

PartSetSpec MakeCofinite(uint64_t start) {
  if (start == 0) {
    throw Error(ErrorKind::kInvalidSpec, "cofinite start must be at least 1");
  }
  return CofiniteParts{start};
}

PartSetSpec MakePrimes() { return PrimeParts{}; }

PartSetSpec ParseFileParts(const std::string& contents,
                           const std::string& source) {
  std::vector<uint64_t> elements;
  std::istringstream in(contents);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    const std::string token = line.substr(first, last - first + 1);
    uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    auto where = [&] {
      return source + ":" + std::to_string(line_no) + ": '" + token + "'";
    };
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::kParse, where() + " is not a positive integer");
    }
    if (value == 0) {
      throw Error(ErrorKind::kParse, where() + " is not a positive integer");
    }
    elements.push_back(value);
  }
  if (elements.empty()) {
    throw Error(ErrorKind::kParse, source + ": no parts listed");
  }
  std::sort(elements.begin(), elements.end());
  if (auto dup = std::adjacent_find(elements.begin(), elements.end());
      dup != elements.end()) {
    throw Error(ErrorKind::kParse,
                source + ": duplicate part " + std::to_string(*dup));
  }
  return FileParts{source, std::move(elements)};
}

PartSetSpec LoadPartSetFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kParse, "cannot read set file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseFileParts(buffer.str(), path.string());
}

bool IsFinite(const PartSetSpec& spec) {
  return std::holds_alternative<FiniteParts>(spec) ||
         std::holds_alternative<FileParts>(spec);
}

std::string ToString(const PartSetSpec& spec) {
  return std::visit(
      Overloaded{
          [](const AllParts&) -> std::string { return "all"; },
          [](const FiniteParts& f) { return "finite:" + JoinNumbers(f.elements); },
          [](const ResidueParts& r) {
            return "mod:" + std::to_string(r.modulus) + ":" +
                   JoinNumbers(r.residues);
          },
          [](const CofiniteParts& c) {
            return "cofinite:" + std::to_string(c.start);
          },
          [](const PrimeParts&) -> std::string { return "primes"; },
          [](const FileParts& f) { return "file:" + f.source; },
      },
      spec);
}

std::vector<uint64_t> PrimesUpTo(uint64_t bound) {
  std::vector<uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<uint64_t> EnumerateParts(const PartSetSpec& spec, uint64_t bound) {
  return std::visit(
      Overloaded{
          [&](const AllParts&) {
            std::vector<uint64_t> out(bound);
            std::iota(out.begin(), out.end(), uint64_t{1});
            return out;
          },
          [&](const FiniteParts& f) { return PrefixOf(f.elements, bound); },
          [&](const ResidueParts& r) {
            std::vector<uint64_t> out;
            for (uint64_t base = 0; base <= bound; base += r.modulus) {
              for (uint64_t residue : r.residues) {
                const uint64_t v = base + residue;
                if (v > bound) break;
                out.push_back(v);
              }
              if (bound - base < r.modulus) break;
            }
            return out;
          },
          [&](const CofiniteParts& c) {
            std::vector<uint64_t> out;
            if (bound >= c.start) {
              out.resize(bound - c.start + 1);
              std::iota(out.begin(), out.end(), c.start);
            }
            return out;
          },
          [&](const PrimeParts&) { return PrimesUpTo(bound); },
          [&](const FileParts& f) { return PrefixOf(f.elements, bound); },
      },
      spec);
}

void ForEachPart(const PartSetSpec& spec, uint64_t bound,
                 const std::function<void(uint64_t)>& visit) {
  std::visit(
      Overloaded{
          [&](const AllParts&) {
            for (uint64_t a = 1; a <= bound; ++a) visit(a);
          },
          [&](const FiniteParts& f) {
            for (uint64_t a : PrefixOf(f.elements, bound)) visit(a);
          },
          [&](const ResidueParts& r) {
            for (uint64_t base = 0; base <= bound; base += r.modulus) {
              for (uint64_t residue : r.residues) {
                if (base + residue > bound) return;
                visit(base + residue);
              }
              if (bound - base < r.modulus) return;
            }
          },
          [&](const CofiniteParts& c) {
            for (uint64_t a = c.start; a <= bound; ++a) visit(a);
          },
          [&](const PrimeParts&) {
            for (uint64_t a : PrimesUpTo(bound)) visit(a);
          },
          [&](const FileParts& f) {
            for (uint64_t a : PrefixOf(f.elements, bound)) visit(a);
          },
      },
      spec);
}

uint64_t CountingFunction(const PartSetSpec& spec, uint64_t x) {
  return std::visit(
      Overloaded{
          [&](const AllParts&) { return x; },
          [&](const FiniteParts& f) {
            return static_cast<uint64_t>(PrefixOf(f.elements, x).size());
          },
          [&](const ResidueParts& r) { return CountResidues(r, x); },
          [&](const CofiniteParts& c) -> uint64_t {
            return x >= c.start ? x - c.start + 1 : 0;
          },
          [&](const PrimeParts&) {
            return static_cast<uint64_t>(PrimesUpTo(x).size());
          },
          [&](const FileParts& f) {
            return static_cast<uint64_t>(PrefixOf(f.elements, x).size());
          },
      },
      spec);
}

CountingTable::CountingTable(const PartSetSpec& spec, uint64_t bound)
    : counts_(bound + 1, 0) {
  const std::vector<uint64_t> parts = EnumerateParts(spec, bound);
  std::size_t next = 0;
  uint64_t running = 0;
  for (uint64_t x = 1; x <= bound; ++x) {
    while (next < parts.size() && parts[next] == x) {
      ++running;
      ++next;
    }
    counts_[x] = running;
  }
}

GcdResult GcdOfSet(const PartSetSpec& spec, uint64_t probe_bound) {
  const std::vector<uint64_t> parts = EnumerateParts(spec, probe_bound);
  if (parts.empty()) {
    throw Error(ErrorKind::kDomain,
                "no parts of " + ToString(spec) + " in [1, " +
                    std::to_string(probe_bound) + "]");
  }
  uint64_t g = 0;
  for (uint64_t a : parts) {
    g = std::gcd(g, a);
    if (g == 1) break;
  }
  bool stable = g == 1;
  if (!stable) {
    if (const auto* f = std::get_if<FiniteParts>(&spec)) {
      stable = f->elements.back() <= probe_bound;
    } else if (const auto* f = std::get_if<FileParts>(&spec)) {
      stable = f->elements.back() <= probe_bound;
    } else if (const auto* r = std::get_if<ResidueParts>(&spec)) {
      // The prefix then holds every residue and r_1 + m, so its gcd is
      // gcd(r_1, ..., r_l, m), which divides every member.
      stable = r->residues.back() <= probe_bound &&
               r->residues.front() + r->modulus <= probe_bound;
    }
  }
  return {g, stable};
}

PartSetSpec NormalizeByGcd(const PartSetSpec& spec, uint64_t d) {
  if (d == 0) throw Error(ErrorKind::kDomain, "divisor must be positive");
  if (d == 1) return spec;
  auto divide_all = [&](const std::vector<uint64_t>& elements) {
    std::vector<uint64_t> out;
    out.reserve(elements.size());
    for (uint64_t a : elements) {
      if (a % d != 0) {
        throw Error(ErrorKind::kDomain, "part " + std::to_string(a) +
                                            " is not divisible by " +
                                            std::to_string(d));
      }
      out.push_back(a / d);
    }
    return out;
  };
  if (const auto* f = std::get_if<FiniteParts>(&spec)) {
    return MakeFinite(divide_all(f->elements));
  }
  if (const auto* f = std::get_if<FileParts>(&spec)) {
    return MakeFinite(divide_all(f->elements));
  }
  if (const auto* r = std::get_if<ResidueParts>(&spec)) {
    if (r->modulus % d != 0) {
      throw Error(ErrorKind::kDomain, "modulus " + std::to_string(r->modulus) +
                                          " is not divisible by " +
                                          std::to_string(d));
    }
    return MakeResidues(r->modulus / d, divide_all(r->residues));
  }
  throw Error(ErrorKind::kUnsupported,
              "cannot normalize " + ToString(spec) + " by " + std::to_string(d));
}

DensityProfile ComputeDensityProfile(const PartSetSpec& spec,
                                     const std::vector<uint64_t>& grid) {
  if (grid.empty()) throw Error(ErrorKind::kDomain, "density grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw Error(ErrorKind::kDomain,
                  "density grid must be strictly increasing and positive");
    }
  }
  DensityProfile profile;
  profile.grid = grid;
  const CountingTable counts(spec, grid.back());
  for (uint64_t x : grid) {
    Rational ratio(counts(x), x);
    ratio.canonicalize();
    profile.ratios.push_back(ratio);
  }
  const std::size_t s = grid.size();
  profile.tail_min.resize(s);
  profile.tail_max.resize(s);
  profile.tail_min[s - 1] = profile.tail_max[s - 1] = profile.ratios[s - 1];
  for (std::size_t i = s - 1; i-- > 0;) {
    profile.tail_min[i] = std::min(profile.ratios[i], profile.tail_min[i + 1]);
    profile.tail_max[i] = std::max(profile.ratios[i], profile.tail_max[i + 1]);
  }
  return profile;
}

}  // namespace partlab
