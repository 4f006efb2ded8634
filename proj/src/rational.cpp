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


#include "bilip/rational.hpp"

#include <ostream>

#include "bilip/error.hpp"

namespace bilip {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInterval: return "MalformedInterval";
    case ErrorCode::kZeroScale: return "ZeroScale";
    case ErrorCode::kDegenerateInterval: return "DegenerateInterval";
    case ErrorCode::kBadFraction: return "BadFraction";
    case ErrorCode::kNotDecreasing: return "NotDecreasing";
    case ErrorCode::kPrefixTooShort: return "PrefixTooShort";
    case ErrorCode::kHypothesisFails: return "HypothesisFails";
    case ErrorCode::kRatioHypothesisFails: return "RatioHypothesisFails";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kDensityTooLow: return "DensityTooLow";
    case ErrorCode::kHeadSelectionFails: return "HeadSelectionFails";
    case ErrorCode::kSupNotAttainedInPrefix: return "SupNotAttainedInPrefix";
    case ErrorCode::kNoAdmissibleIndex: return "NoAdmissibleIndex";
    case ErrorCode::kDepthTooSmall: return "DepthTooSmall";
    case ErrorCode::kInequalityFails: return "InequalityFails";
    case ErrorCode::kDeltaTooLarge: return "DeltaTooLarge";
    case ErrorCode::kRatioTooLarge: return "RatioTooLarge";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kMeasureTooSmall: return "MeasureTooSmall";
    case ErrorCode::kDepthExceedsPrefix: return "DepthExceedsPrefix";
    case ErrorCode::kNoAdmissibleScale: return "NoAdmissibleScale";
    case ErrorCode::kConnectorSlopeOutOfRange: return "ConnectorSlopeOutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

bool IsInternalError(ErrorCode code) {
  return code == ErrorCode::kInfeasible || code == ErrorCode::kNotFound ||
         code == ErrorCode::kConnectorSlopeOutOfRange;
}

Rational::Rational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through mpz.
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
  value_ = mpq_class(z);
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(Rational(num).numerator(), Rational(den).numerator()) {}

Rational::Rational(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw Error(ErrorCode::kParseError,
                "not a rational: \"" + std::string(text) + "\"");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::ToString() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt Rational::Floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::Ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational Abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational Pow(const Rational& x, std::int64_t e) {
  const bool invert = e < 0;
  const unsigned long n = static_cast<unsigned long>(invert ? -e : e);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), n);
  if (invert) {
    if (num == 0) throw std::domain_error("zero to a negative power");
    return Rational(den, num);
  }
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.ToString();
}

}  // namespace bilip
