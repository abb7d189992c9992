// Copyright 2026 The Timeable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "timeable/rational.h"

#include <cctype>
#include <sstream>

#include "timeable/errors.h"

namespace timeable {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void BadNumber(std::string_view text) {
  Fail(ErrorCode::kParse, "malformed rational \"" + std::string(text) + "\"");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) BadNumber(text);
    BigInt d(std::string(den), 10);
    if (d == 0) BadNumber(text);
    out = Rational(BigInt(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) BadNumber(text);
    if ((!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      BadNumber(text);
    }
    BigInt scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole), 10);
    BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac), 10);
    out = Rational(w * scale + f, scale);
  } else {
    if (!AllDigits(body)) BadNumber(text);
    out = Rational(BigInt(std::string(body), 10));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

std::string FormatRational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

std::string FormatTuple(const std::vector<Rational>& tuple) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out << ',';
    out << FormatRational(tuple[i]);
  }
  out << ')';
  return out.str();
}

BigInt Floor(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt Ceil(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational Pow(const Rational& base, unsigned long exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

BigInt Pow2(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

}  // namespace timeable
