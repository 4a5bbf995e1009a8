#include "puiseux/rational.hpp"

#include <cctype>
#include <utility>

#include "puiseux/error.hpp"
#include "puiseux/primes.hpp"

namespace puiseux {

Rational Rational::reduce(Integer numerator, Integer denominator) {
  if (sgn(denominator) == 0) {
    fail(ErrorCode::kInvalidArgument, "zero denominator");
  }
  Rational q(std::move(numerator), std::move(denominator), false);
  q.normalize();
  return q;
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    fail(ErrorCode::kInvalidArgument, "malformed rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(ErrorCode::kInvalidArgument, "malformed rational '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  Integer n = parse_integer(body.substr(0, slash), text);
  Integer d = 1;
  if (slash != std::string_view::npos) {
    d = parse_integer(body.substr(slash + 1), text);
  }
  if (negative) n = -n;
  return reduce(std::move(n), std::move(d));
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) fail(ErrorCode::kInvalidArgument, "reciprocal of zero");
  return reduce(den_, num_);
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const { return Rational(-num_, den_, true); }

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) fail(ErrorCode::kInvalidArgument, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int c = cmp(Integer(lhs.num_ * rhs.den_), Integer(rhs.num_ * lhs.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

long valuation(Integer n, const Integer& p) {
  long v = 0;
  if (sgn(n) < 0) n = -n;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

}  // namespace

long padic(const Rational& q, const Integer& p) {
  if (q.is_zero()) {
    fail(ErrorCode::kUndefinedValuation, "p-adic valuation of 0 is undefined");
  }
  if (!is_prime(p)) {
    fail(ErrorCode::kInvalidArgument, p.get_str() + " is not prime");
  }
  return valuation(q.num(), p) - valuation(q.den(), p);
}

Integer lcm_den(std::span<const Rational> values) {
  if (values.empty()) fail(ErrorCode::kInvalidArgument, "lcm_den of an empty list");
  Integer out = 1;
  for (const auto& q : values) out = lcm(out, q.den());
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace puiseux

std::size_t std::hash<puiseux::Rational>::operator()(
    const puiseux::Rational& q) const noexcept {
  std::size_t h = mpz_fdiv_ui(q.num().get_mpz_t(), 1000000007UL);
  return h * 31 + mpz_fdiv_ui(q.den().get_mpz_t(), 998244353UL);
}
