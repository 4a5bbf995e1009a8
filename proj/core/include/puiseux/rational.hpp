#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace puiseux {

using Integer = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// `num()` and `den()` are the numerator and denominator of the lowest-terms
/// representation; zero is 0/1. The text form is "n/d", or just "n" when the
/// denominator is 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::signed_integral T>
  Rational(T value) : num_(static_cast<long>(value)), den_(1) {}  // NOLINT

  template <std::unsigned_integral T>
  Rational(T value) : num_(static_cast<unsigned long>(value)), den_(1) {}  // NOLINT

  explicit Rational(Integer value) : num_(std::move(value)), den_(1) {}

  /// Builds numerator/denominator in lowest terms. Throws kInvalidArgument when
  /// the denominator is zero.
  static Rational reduce(Integer numerator, Integer denominator);

  /// Parses "n" or "n/d" (optional leading '-'). Throws kInvalidArgument.
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer not exceeding the value.
  Integer floor() const;

  Rational reciprocal() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
  }

 private:
  Rational(Integer num, Integer den, bool /*already_reduced*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize();

  Integer num_;
  Integer den_;
};

/// p-adic valuation v_p(q) = v_p(n(q)) - v_p(d(q)).
/// Throws kUndefinedValuation for q = 0 and kInvalidArgument when p is not prime.
long padic(const Rational& q, const Integer& p);

/// Least common multiple of the denominators. Throws kInvalidArgument when empty.
Integer lcm_den(std::span<const Rational> values);

std::string to_string(const Integer& value);

}  // namespace puiseux

template <>
struct std::hash<puiseux::Rational> {
  std::size_t operator()(const puiseux::Rational& q) const noexcept;
};
