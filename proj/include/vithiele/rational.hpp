// Copyright 2026 The vithiele Authors
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

#ifndef VITHIELE_RATIONAL_HPP_
#define VITHIELE_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>

namespace vithiele {

// All arithmetic in this project is exact. Scores, multipliers, valuations and
// bounds are arbitrary-precision rationals; no floating point anywhere.
using BigInt = mpz_class;
using Rational = mpq_class;

// p/q reduced to lowest terms, denominator > 0. Throws InputError when q == 0.
Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const BigInt& numerator, const BigInt& denominator);

// Accepts "p" or "p/q" (decimal, optional sign). Throws InputError otherwise.
Rational parse_rational(const std::string& text);

// Renders "p/q", omitting "/q" when the denominator is 1.
std::string to_string(const Rational& value);

BigInt lcm(const BigInt& a, const BigInt& b);

// Smallest t >= 0 with 2^t >= value. Requires value >= 1.
int ceil_log2(const BigInt& value);

}  // namespace vithiele

#endif  // VITHIELE_RATIONAL_HPP_
