// Copyright 2026 The bilip Authors
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


#ifndef BILIP_RATIONAL_HPP_
#define BILIP_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bilip {

using BigInt = mpz_class;

// Exact arbitrary-precision fraction, always kept in lowest terms with a
// positive denominator. This is the only scalar type of the library.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  // Accepts "p", "p/q", "-p/q", "+p/q" with decimal integers. Throws
  // Error(kParseError) on anything else, including q = 0.
  static Rational Parse(std::string_view text);

  // Canonical "p/q" (q > 0, reduced, '-' only for negatives).
  std::string ToString() const;

  // Display only; never feed this back into a computation.
  double ToDouble() const { return value_.get_d(); }

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigInt Floor() const;
  BigInt Ceil() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

Rational Abs(const Rational& x);
Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

// x^e for any integer e; x must be nonzero when e < 0.
Rational Pow(const Rational& x, std::int64_t e);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace bilip

#endif  // BILIP_RATIONAL_HPP_
