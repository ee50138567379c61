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

#include "partlab/bigint.h"

#include <gmp.h>

#include <cmath>
#include <numbers>
#include <string>

#include "partlab/error.h"

namespace partlab {

namespace {

// Top 64 bits of |value| as a long double in [2^63, 2^64), plus the binary
// exponent of the dropped part.
long double TopBits(const BigInt& value, long& shift) {
  const std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
  shift = bits > 64 ? static_cast<long>(bits - 64) : 0;
  BigInt top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), value.get_mpz_t(), shift);
  // top < 2^64 fits in two 32-bit halves regardless of unsigned long width.
  BigInt high;
  mpz_tdiv_q_2exp(high.get_mpz_t(), top.get_mpz_t(), 32);
  BigInt low;
  mpz_tdiv_r_2exp(low.get_mpz_t(), top.get_mpz_t(), 32);
  return static_cast<long double>(mpz_get_ui(high.get_mpz_t())) * 4294967296.0L +
         static_cast<long double>(mpz_get_ui(low.get_mpz_t()));
}

}  // namespace

long double LogBigInt(const BigInt& value) {
  if (sgn(value) <= 0) {
    throw Error(ErrorKind::kDomain, "log of a nonpositive integer");
  }
  long shift = 0;
  const long double top = TopBits(value, shift);
  return std::log(top) +
         static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

std::string RationalToString(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational ParseRational(const std::string& text) {
  auto fail = [&]() -> Error {
    return Error(ErrorKind::kParse, "not a rational number: '" + text + "'");
  };
  if (text.empty()) throw fail();
  std::string body = text;
  bool negative = false;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  auto digits_only = [](const std::string& s) {
    return !s.empty() &&
           s.find_first_not_of("0123456789") == std::string::npos;
  };
  Rational result;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) throw fail();
    BigInt d(den);
    if (d == 0) throw Error(ErrorKind::kDomain, "zero denominator in '" + text + "'");
    result = Rational(BigInt(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if ((!whole.empty() && !digits_only(whole)) ||
        (!frac.empty() && !digits_only(frac)) || (whole.empty() && frac.empty())) {
      throw fail();
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(BigInt(whole.empty() ? "0" : whole) * scale +
                          BigInt(frac.empty() ? "0" : frac),
                      scale);
  } else {
    if (!digits_only(body)) throw fail();
    result = Rational(BigInt(body));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

long double RationalToLongDouble(const Rational& value) {
  if (sgn(value) == 0) return 0;
  // Scale so the integer quotient carries at least 64 significant bits.
  const long num_bits = static_cast<long>(
      mpz_sizeinbase(value.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(
      mpz_sizeinbase(value.get_den_mpz_t(), 2));
  const long shift = 66 - (num_bits - den_bits);
  BigInt scaled = abs(value.get_num());
  if (shift > 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), shift);
  } else {
    mpz_tdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), -shift);
  }
  BigInt quotient;
  mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), value.get_den_mpz_t());
  long top_shift = 0;
  const long double top = TopBits(quotient, top_shift);
  const long double magnitude = std::ldexp(top, static_cast<int>(top_shift - shift));
  return sgn(value) < 0 ? -magnitude : magnitude;
}

}  // namespace partlab
