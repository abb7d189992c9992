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

#ifndef TIMEABLE_RATIONAL_H_
#define TIMEABLE_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace timeable {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p/q", integers and decimals ("-1.25", "3e2" is not accepted).
// Result is canonicalized. Throws Error(kParse) on malformed text and on a
// zero denominator.
Rational ParseRational(std::string_view text);

// Lowest-terms "p/q"; integers print without a denominator.
std::string FormatRational(const Rational& q);

std::string FormatTuple(const std::vector<Rational>& tuple);

BigInt Floor(const Rational& q);
BigInt Ceil(const Rational& q);
Rational Pow(const Rational& base, unsigned long exponent);
BigInt Pow2(unsigned long exponent);

// p/q in lowest terms.
inline Rational Fraction(long p, long q) {
  Rational out(p, q);
  out.canonicalize();
  return out;
}

inline bool IsInteger(const Rational& q) { return q.get_den() == 1; }

}  // namespace timeable

#endif  // TIMEABLE_RATIONAL_H_
