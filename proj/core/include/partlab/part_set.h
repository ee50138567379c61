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

#ifndef PARTLAB_PART_SET_H_
#define PARTLAB_PART_SET_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "partlab/bigint.h"

namespace partlab {

// Symbolic description of a set A of positive integers. Construct through
// the Make* factories, which enforce the per-variant invariants; the
// variant members are plain data so that specs stay cheap to copy and
// compare.
struct AllParts {
  friend bool operator==(const AllParts&, const AllParts&) = default;
};

// Nonempty, strictly increasing, all >= 1.
struct FiniteParts {
  std::vector<uint64_t> elements;
  friend bool operator==(const FiniteParts&, const FiniteParts&) = default;
};

// {a >= 1 : a = r (mod m) for some listed r}. Residues are strictly
// increasing and lie in [1, m]; r = m stands for the class of 0, whose
// members are m, 2m, ...
struct ResidueParts {
  uint64_t modulus = 1;
  std::vector<uint64_t> residues;
  friend bool operator==(const ResidueParts&, const ResidueParts&) = default;
};

// {n : n >= start}, start >= 1.
struct CofiniteParts {
  uint64_t start = 1;
  friend bool operator==(const CofiniteParts&, const CofiniteParts&) = default;
};

struct PrimeParts {
  friend bool operator==(const PrimeParts&, const PrimeParts&) = default;
};

// Finite set read from a file; `source` is kept for display only.
struct FileParts {
  std::string source;
  std::vector<uint64_t> elements;
  friend bool operator==(const FileParts&, const FileParts&) = default;
};

using PartSetSpec = std::variant<AllParts, FiniteParts, ResidueParts,
                                 CofiniteParts, PrimeParts, FileParts>;

PartSetSpec MakeAll();
PartSetSpec MakeFinite(std::vector<uint64_t> elements);
PartSetSpec MakeResidues(uint64_t modulus, std::vector<uint64_t> residues);
PartSetSpec MakeCofinite(uint64_t start);
PartSetSpec MakePrimes();

// One decimal integer per line; blank lines are skipped. Rejects
// duplicates, zero, negative and non-numeric lines with a kParse error
// naming the line number. Elements are sorted on load.
PartSetSpec LoadPartSetFile(const std::filesystem::path& path);
PartSetSpec ParseFileParts(const std::string& contents,
                           const std::string& source);

// True for Finite and FromFile specs.
bool IsFinite(const PartSetSpec& spec);

// Renders in the set-spec mini-language: "all", "finite:2,3", "mod:4:1,3",
// "cofinite:5", "primes", "file:PATH".
std::string ToString(const PartSetSpec& spec);

// A ∩ [1, bound], ascending.
std::vector<uint64_t> EnumerateParts(const PartSetSpec& spec, uint64_t bound);

// Calls visit(a) for each a ∈ A ∩ [1, bound] in increasing order without
// materializing the list (except for primes, which need the sieve).
void ForEachPart(const PartSetSpec& spec, uint64_t bound,
                 const std::function<void(uint64_t)>& visit);

// A(x) = |A ∩ [1, x]|.
uint64_t CountingFunction(const PartSetSpec& spec, uint64_t x);

// Materialized A(0..bound) for repeated counting queries (primes in
// particular need a sieve per query otherwise).
class CountingTable {
 public:
  CountingTable(const PartSetSpec& spec, uint64_t bound);

  uint64_t bound() const { return counts_.size() - 1; }
  // Requires x <= bound().
  uint64_t operator()(uint64_t x) const { return counts_[x]; }

 private:
  std::vector<uint64_t> counts_;
};

struct GcdResult {
  uint64_t value = 0;
  // True when the prefix gcd is provably gcd(A): the value is 1, the set is
  // finite and fully inside the probe bound, or the residue prefix covers
  // every residue plus one full period.
  bool stable = false;
};

// gcd(A ∩ [1, probe_bound]). Throws kDomain when the intersection is empty.
GcdResult GcdOfSet(const PartSetSpec& spec, uint64_t probe_bound);

// The spec of {a/d : a ∈ A}. Finite sets divide element-wise (a FromFile
// spec becomes Finite); Residues(m, r) becomes Residues(m/d, r/d). Any
// other variant only accepts d = 1.
PartSetSpec NormalizeByGcd(const PartSetSpec& spec, uint64_t d);

// Finite-scale surrogate for lower/upper asymptotic density.
struct DensityProfile {
  std::vector<uint64_t> grid;
  std::vector<Rational> ratios;    // A(x_i)/x_i
  std::vector<Rational> tail_min;  // min of ratios[i..end]
  std::vector<Rational> tail_max;  // max of ratios[i..end]
};

// grid must be nonempty, strictly increasing and >= 1 (kDomain otherwise).
DensityProfile ComputeDensityProfile(const PartSetSpec& spec,
                                     const std::vector<uint64_t>& grid);

// Primes <= bound by the sieve of Eratosthenes.
std::vector<uint64_t> PrimesUpTo(uint64_t bound);

}  // namespace partlab

#endif  // PARTLAB_PART_SET_H_
