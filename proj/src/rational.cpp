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

#include "vithiele/rational.hpp"

#include <cstddef>

#include "vithiele/errors.hpp"

namespace vithiele {

Rational make_rational(long numerator, long denominator) {
  return make_rational(BigInt(numerator), BigInt(denominator));
}

Rational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

namespace {

BigInt parse_integer(const std::string& text, const char* what) {
  if (text.empty()) throw InputError(std::string("empty ") + what + " in rational");
  BigInt value;
  if (mpz_set_str(value.get_mpz_t(), text.c_str(), 10) != 0) {
    throw InputError("malformed rational: '" + text + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return make_rational(parse_integer(text, "numerator"), BigInt(1));
  }
  if (text.find('/', slash + 1) != std::string::npos) {
    throw InputError("malformed rational: '" + text + "'");
  }
  const BigInt num = parse_integer(text.substr(0, slash), "numerator");
  const BigInt den = parse_integer(text.substr(slash + 1), "denominator");
  return make_rational(num, den);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

int ceil_log2(const BigInt& value) {
  if (value < 1) throw InputError("ceil_log2 requires a positive argument");
  const std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
  const bool power_of_two = mpz_popcount(value.get_mpz_t()) == 1;
  return static_cast<int>(power_of_two ? bits - 1 : bits);
}

}  // namespace vithiele
