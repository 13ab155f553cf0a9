#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series over an exact coefficient ring.
 *
 * TruncSeries<R> stores the coefficients of x^0 .. x^{N-1} of a series known
 * modulo x^N; N is its precision. Every operation tracks precision: results
 * are reported modulo the smallest precision that is exact for the inputs.
 *
 * The coefficient type R supplies ring arithmetic plus four ADL hooks:
 *   zero_like(r), one_like(r)   -> ring constants in the ring of r
 *   same_ring(r, s)             -> false when r and s cannot be combined
 *   times_int(r, n)             -> n * r for an integer n
 * and, for series_exp / series_log (characteristic 0 only):
 *   div_int(r, n)               -> r / n
 */

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "abelcong/error.hpp"
#include "abelcong/rational.hpp"

namespace abelcong {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool same_ring(const Rational&, const Rational&) { return true; }
inline Rational times_int(const Rational& r, std::int64_t n) { return r * Rational(static_cast<long>(n)); }
inline Rational div_int(const Rational& r, std::int64_t n) { return r / Rational(static_cast<long>(n)); }

template <class R>
concept SeriesRing = requires(const R& a, const R& b, std::int64_t n) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<R>;
  { one_like(a) } -> std::convertible_to<R>;
  { same_ring(a, b) } -> std::convertible_to<bool>;
  { times_int(a, n) } -> std::convertible_to<R>;
};

template <SeriesRing R>
class TruncSeries {
 public:
  using value_type = R;

  TruncSeries() = default;
  /// Series whose precision is the number of supplied coefficients.
  explicit TruncSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Zero series of the given precision in the ring of `like`.
  static TruncSeries zero(const R& like, std::size_t precision) {
    return TruncSeries(std::vector<R>(precision, zero_like(like)));
  }
  /// The constant `c` known modulo x^precision.
  static TruncSeries constant(const R& c, std::size_t precision) {
    auto s = zero(c, precision);
    if (precision > 0) s.coeffs_[0] = c;
    return s;
  }

  std::size_t precision() const noexcept { return coeffs_.size(); }
  const R& operator[](std::size_t i) const { return coeffs_.at(i); }
  R& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<R>& coeffs() const noexcept { return coeffs_; }

  /// Smallest exponent carrying a non-zero coefficient, if any.
  std::optional<std::size_t> first_nonzero() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == zero_like(coeffs_[i]))) return i;
    return std::nullopt;
  }
  bool is_zero() const { return !first_nonzero().has_value(); }

  TruncSeries truncated(std::size_t precision) const {
    const auto n = std::min(precision, coeffs_.size());
    return TruncSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  /// Exact equality: same precision and same coefficients.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<R> coeffs_;
};

namespace detail {

template <class R>
void require_same_ring(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  if (a.precision() > 0 && b.precision() > 0 && !same_ring(a[0], b[0]))
    throw RingMismatch("series over different coefficient rings");
}

}  // namespace detail

/// Result of comparing two series that may be known to different orders.
struct SeriesComparison {
  bool equal = false;             ///< coefficients agree on the common prefix
  std::size_t compared_to = 0;    ///< length of the common prefix
  bool precision_differs = false; ///< the inputs had different precision
};

template <class R>
SeriesComparison compare(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  detail::require_same_ring(a, b);
  SeriesComparison out;
  out.compared_to = std::min(a.precision(), b.precision());
  out.precision_differs = a.precision() != b.precision();
  out.equal = true;
  for (std::size_t i = 0; i < out.compared_to; ++i)
    if (!(a[i] == b[i])) {
      out.equal = false;
      break;
    }
  return out;
}

template <class R>
TruncSeries<R> operator+(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  detail::require_same_ring(a, b);
  const auto n = std::min(a.precision(), b.precision());
  std::vector<R> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a[i] + b[i]);
  return TruncSeries<R>(std::move(c));
}

template <class R>
TruncSeries<R> operator-(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  detail::require_same_ring(a, b);
  const auto n = std::min(a.precision(), b.precision());
  std::vector<R> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a[i] - b[i]);
  return TruncSeries<R>(std::move(c));
}

template <class R>
TruncSeries<R> operator-(const TruncSeries<R>& a) {
  std::vector<R> c;
  c.reserve(a.precision());
  for (const auto& x : a.coeffs()) c.push_back(-x);
  return TruncSeries<R>(std::move(c));
}

template <class R>
TruncSeries<R> operator*(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  detail::require_same_ring(a, b);
  const auto n = std::min(a.precision(), b.precision());
  if (n == 0) return TruncSeries<R>();
  std::vector<R> c(n, zero_like(a[0]));
  const R zero = zero_like(a[0]);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == zero) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] = c[i + j] + a[i] * b[j];
  }
  return TruncSeries<R>(std::move(c));
}

/// Coefficient-wise scaling by a ring element.
template <class R>
TruncSeries<R> operator*(const R& k, const TruncSeries<R>& a) {
  std::vector<R> c;
  c.reserve(a.precision());
  for (const auto& x : a.coeffs()) c.push_back(k * x);
  return TruncSeries<R>(std::move(c));
}

/// sum a_n x^n  ->  sum n a_n x^{n-1}; precision drops by one.
template <class R>
TruncSeries<R> series_derive(const TruncSeries<R>& a) {
  if (a.precision() <= 1) return TruncSeries<R>();
  std::vector<R> c;
  c.reserve(a.precision() - 1);
  for (std::size_t n = 1; n < a.precision(); ++n) c.push_back(times_int(a[n], static_cast<std::int64_t>(n)));
  return TruncSeries<R>(std::move(c));
}

/// k-fold derivative.
template <class R>
TruncSeries<R> series_derive(const TruncSeries<R>& a, std::size_t k) {
  TruncSeries<R> out = a;
  for (std::size_t i = 0; i < k; ++i) out = series_derive(out);
  return out;
}

/// a^e by binary powering; a^0 is 1 at the precision of a.
template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& a, std::uint64_t e) {
  if (a.precision() == 0) return a;
  TruncSeries<R> result = TruncSeries<R>::constant(one_like(a[0]), a.precision());
  TruncSeries<R> base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// s(x) -> s(x^k); s known mod x^N gives s(x^k) known mod x^{kN}.
template <class R>
TruncSeries<R> substitute_power(const TruncSeries<R>& s, std::size_t k) {
  if (k == 0) throw InvalidArgument("substitute_power: k must be positive");
  if (s.precision() == 0) return s;
  auto out = TruncSeries<R>::zero(s[0], s.precision() * k);
  for (std::size_t i = 0; i < s.precision(); ++i) out[i * k] = s[i];
  return out;
}

/// exp(s) for s with zero constant term, via n g_n = sum_{k=1}^n k s_k g_{n-k}.
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& s) {
  const auto n = s.precision();
  if (n == 0) return s;
  const R zero = zero_like(s[0]);
  if (!(s[0] == zero)) throw InvalidArgument("series_exp: constant term must be 0");
  std::vector<R> g(n, zero);
  g[0] = one_like(s[0]);
  for (std::size_t m = 1; m < n; ++m) {
    R acc = zero;
    for (std::size_t k = 1; k <= m; ++k)
      if (!(s[k] == zero)) acc = acc + times_int(s[k], static_cast<std::int64_t>(k)) * g[m - k];
    g[m] = div_int(acc, static_cast<std::int64_t>(m));
  }
  return TruncSeries<R>(std::move(g));
}

/// log(f) for f with constant term 1 (inverse of series_exp).
template <class R>
TruncSeries<R> series_log(const TruncSeries<R>& f) {
  const auto n = f.precision();
  if (n == 0) return f;
  const R zero = zero_like(f[0]);
  if (!(f[0] == one_like(f[0]))) throw InvalidArgument("series_log: constant term must be 1");
  std::vector<R> l(n, zero);
  for (std::size_t m = 1; m < n; ++m) {
    R acc = times_int(f[m], static_cast<std::int64_t>(m));
    for (std::size_t k = 1; k < m; ++k)
      if (!(l[k] == zero)) acc = acc - times_int(l[k], static_cast<std::int64_t>(k)) * f[m - k];
    l[m] = div_int(acc, static_cast<std::int64_t>(m));
  }
  return TruncSeries<R>(std::move(l));
}

template <class R>
std::ostream& operator<<(std::ostream& os, const TruncSeries<R>& s) {
  bool first = true;
  for (std::size_t i = 0; i < s.precision(); ++i) {
    if (s[i] == zero_like(s[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << s[i] << ")";
    if (i > 0) os << "*x^" << i;
  }
  if (first) os << "0";
  return os << " + O(x^" << s.precision() << ")";
}

}  // namespace abelcong
