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

#ifndef PARTLAB_BIGINT_H_
#define PARTLAB_BIGINT_H_

#include <gmpxx.h>

#include <string>

namespace partlab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Natural log of a positive integer from its bit length and top 64 bits.
// Relative error is bounded by the long double rounding of the mantissa,
// far below 1e-15 for any input. Requires value > 0.
long double LogBigInt(const BigInt& value);

// "num/den" with both parts in decimal; integers render as "num/1".
std::string RationalToString(const Rational& value);

// Accepts "p/q", "p" or a finite decimal such as "0.25". Throws kParse.
Rational ParseRational(const std::string& text);

long double RationalToLongDouble(const Rational& value);

}  // namespace partlab

#endif  // PARTLAB_BIGINT_H_
