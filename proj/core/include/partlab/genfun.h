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

#ifndef PARTLAB_GENFUN_H_
#define PARTLAB_GENFUN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "partlab/bigint.h"
#include "partlab/part_set.h"
#include "partlab/probe.h"

namespace partlab {

// μ(1..limit).
class MobiusTable {
 public:
  explicit MobiusTable(std::vector<int8_t> values) : mu_(std::move(values)) {}

  uint64_t limit() const { return mu_.size() - 1; }
  // Requires 1 <= n <= limit().
  int operator()(uint64_t n) const { return mu_[n]; }

 private:
  std::vector<int8_t> mu_;  // index 0 unused
};

// Linear sieve. Throws kDomain for limit = 0.
MobiusTable MobiusSieve(uint64_t limit);

// Coefficients of log f(x) = Σ b_ℓ x^ℓ, f the partition generating function
// of A, with b_ℓ = Σ_{ℓ = a·k, a ∈ A} 1/k and S_B(n) = b_1 + ... + b_n.
//
// All values share the denominator lcm(1..limit), so they are stored as
// integer numerators over that common denominator.
class CoefficientSeries {
 public:
  CoefficientSeries(PartSetSpec spec, BigInt denominator,
                    std::vector<BigInt> b_numerators,
                    std::vector<BigInt> s_numerators);

  const PartSetSpec& spec() const { return spec_; }
  uint64_t limit() const { return s_num_.size() - 1; }
  const BigInt& denominator() const { return denominator_; }

  // b_ℓ for 1 <= ℓ <= limit, canonicalized.
  Rational b(uint64_t l) const;
  // S_B(n) for 0 <= n <= limit, canonicalized; S_B(0) = 0.
  Rational s(uint64_t n) const;
  // S_B(n)·denominator().
  const BigInt& s_numerator(uint64_t n) const { return s_num_[n]; }
  const BigInt& b_numerator(uint64_t l) const { return b_num_[l]; }

 private:
  PartSetSpec spec_;
  BigInt denominator_;
  std::vector<BigInt> b_num_;  // index 0 unused
  std::vector<BigInt> s_num_;
};

// Throws kDomain for limit = 0.
CoefficientSeries BCoefficients(const PartSetSpec& spec, uint64_t limit);

// S_B(n) = Σ_{k=1}^{n} A(⌊n/k⌋)/k, evaluated straight from the counting
// function.
Rational SbViaCountingIdentity(const PartSetSpec& spec, uint64_t n);
Rational SbViaCountingIdentity(const CountingTable& counts, uint64_t n);

// Σ_{k=1}^{n} μ(k)/k · S_B(⌊n/k⌋), which equals A(n). Holds the weighted
// Möbius prefix sums so repeated queries cost O(sqrt n) each.
class MobiusInverter {
 public:
  explicit MobiusInverter(const CoefficientSeries& series);

  // Requires 1 <= n <= series limit.
  Rational Invert(uint64_t n) const;

 private:
  const CoefficientSeries& series_;
  // prefix_[k] = Σ_{j<=k} μ(j)·(D/j), D the series denominator.
  std::vector<BigInt> prefix_;
};

Rational MobiusInvertSb(const CoefficientSeries& series, uint64_t n);

struct RoundTripReport {
  PartSetSpec spec;
  uint64_t limit = 0;
  // Möbius inversion of S_B reproduces A(n) for every n <= limit.
  bool inversion_exact = true;
  // Prefix sums of b_ℓ agree with the counting identity for every n.
  bool identity_exact = true;
  std::optional<uint64_t> first_inversion_mismatch;
  std::optional<uint64_t> first_identity_mismatch;

  bool pass() const { return inversion_exact && identity_exact; }
};

RoundTripReport CheckMobiusRoundTrip(const PartSetSpec& spec, uint64_t limit);

// Upper bound on the number of factors log_f_eval will sum.
inline constexpr uint64_t kMaxLogFTerms = 200'000'000;

struct LogFValue {
  long double value = 0;  // Σ_{a ∈ A, a <= cutoff} -log(1 - x^a)
  uint64_t cutoff = 0;
  // Bound on the dropped tail x^(cutoff+1)/(1-x)^2; 0 for finite sets.
  long double tail_bound = 0;
};

// log f(x) = -Σ_{a∈A} log(1 - x^a), truncated where the geometric tail
// bound drops to tail_tol; the result underestimates by at most tail_tol.
// Throws kDomain unless 0 < x < 1, and for infinite A with tail_tol <= 0.
LogFValue LogFEval(const PartSetSpec& spec, long double x,
                   long double tail_tol);

inline constexpr long double kDefaultLogFTolerance = 1e-12L;
inline constexpr long double kAbelianBandTolerance = 0.02L;
inline constexpr long double kTauberianBandTolerance = 0.01L;

// π²α/6.
long double DensityConstant(const Rational& alpha);

struct AbelianPoint {
  long double x = 0;
  long double log_f = 0;
  long double scaled = 0;  // (1-x)·log f(x)
};

struct AbelianProbeReport {
  PartSetSpec spec;
  Rational alpha;
  long double target = 0;  // π²α/6
  std::vector<AbelianPoint> points;
  // At the last grid point; absent when the target is 0.
  std::optional<long double> relative_deviation;
  Band band;
  bool pass = false;
};

// Tabulates (1-x)·log f(x) on an increasing grid in (0, 1) and checks the
// last point against the band (default ±2% of π²α/6).
AbelianProbeReport AbelianProbe(const PartSetSpec& spec, const Rational& alpha,
                                const std::vector<long double>& x_grid,
                                std::optional<Band> band = std::nullopt,
                                long double tail_tol = kDefaultLogFTolerance);

struct TauberianPoint {
  uint64_t n = 0;
  Rational s;              // S_B(n), exact
  long double ratio = 0;   // S_B(n)/n
};

struct TauberianProbeReport {
  PartSetSpec spec;
  long double target = 0;
  std::vector<TauberianPoint> points;
  std::optional<long double> relative_deviation;
  Band band;
  bool pass = false;
};

// Tabulates S_B(n)/n on the grid and checks the last point against the
// band (default ±1% of `target`).
TauberianProbeReport TauberianProbe(const PartSetSpec& spec,
                                    long double target,
                                    const std::vector<uint64_t>& grid,
                                    std::optional<Band> band = std::nullopt);

}  // namespace partlab

#endif  // PARTLAB_GENFUN_H_
