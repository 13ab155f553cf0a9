#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals, p-adic valuations and prime enumeration.
 *
 * Rational wraps a GMP mpq_class that is always kept canonical (lowest
 * terms, positive denominator). Textual form is "a/b", with "/b" omitted
 * when b = 1 and the sign carried by the numerator.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace abelcong {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Strict parser for "[-+]digits[/digits]". Throws ParseError.
  static Rational parse(std::string_view text);

  std::string str() const;

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Greatest integer <= this.
  Integer floor() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class q_;
};

/// Rational raised to a non-negative integer power.
Rational pow(const Rational& base, std::uint64_t exponent);

/**
 * p-adic valuation, with +infinity (the valuation of zero) as a sentinel
 * that compares above every finite value.
 */
class Valuation {
 public:
  constexpr Valuation(std::int64_t v = 0) : value_(v), infinite_(false) {}  // NOLINT
  static constexpr Valuation infinity() { Valuation v; v.infinite_ = true; return v; }

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; meaningless when is_infinite().
  constexpr std::int64_t value() const { return value_; }

  std::string str() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

 private:
  std::int64_t value_;
  bool infinite_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

Valuation padic_val(const Integer& n, std::uint64_t p);
Valuation padic_val(const Rational& q, std::uint64_t p);

bool is_prime(std::uint64_t n);

/// Primes in the closed interval [lo, hi], increasing.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// Distinct prime divisors of |n| (n != 0), increasing.
std::vector<std::uint64_t> prime_divisors(const Integer& n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace abelcong
