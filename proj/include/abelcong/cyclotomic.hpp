#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Q(zeta_d) and in the residue rings O/pO.
 *
 * Elements of Q(zeta_d) are stored in the power basis 1, z, ..., z^{phi(d)-1},
 * z a primitive d-th root of unity, reduced modulo the d-th cyclotomic
 * polynomial. The power basis is an integral basis of the ring of integers,
 * so p-integrality is a coordinate-wise valuation test, and for p not
 * dividing d the ring O/pO = F_p[T]/(Phi_d mod p) is the product of the
 * residue fields above p.
 */

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "abelcong/rational.hpp"

namespace abelcong {

class CycloField;
using FieldRef = std::shared_ptr<const CycloField>;

/// Q(zeta_d). Instances are interned: one object per conductor.
class CycloField {
 public:
  static FieldRef get(std::uint32_t d);

  std::uint32_t conductor() const noexcept { return d_; }
  std::uint32_t degree() const noexcept { return phi_; }
  /// Coefficients of Phi_d, lowest degree first; monic of degree phi(d).
  const std::vector<Integer>& minpoly() const noexcept { return minpoly_; }
  /// Coordinates of z^k for 0 <= k < d.
  const std::vector<Integer>& power(std::uint32_t k) const { return powers_.at(k); }

  /// True when p divides d; such primes are treated as ramified and skipped.
  bool is_ramified(std::uint64_t p) const;

  CycloField(std::uint32_t d, std::vector<Integer> minpoly);

 private:
  std::uint32_t d_;
  std::uint32_t phi_;
  std::vector<Integer> minpoly_;
  std::vector<std::vector<Integer>> powers_;
};

/// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(std::uint32_t d);

std::uint32_t euler_phi(std::uint32_t d);

/// Multiplicative order of p modulo d (d >= 1, gcd(p, d) = 1).
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t d);

class ResidueElem;

class CycloElem {
 public:
  /// Zero of Q.
  CycloElem();
  CycloElem(FieldRef field, std::vector<Rational> coords);

  static CycloElem zero(const FieldRef& field);
  static CycloElem one(const FieldRef& field);

  const FieldRef& field() const noexcept { return field_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws InvalidArgument when !is_rational().
  Rational as_rational() const;
  /// lcm of the coordinate denominators.
  Integer denominator() const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator*=(const Rational& q);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator*(CycloElem a, const Rational& q) { return a *= q; }
  friend CycloElem operator*(const Rational& q, CycloElem a) { return a *= q; }
  friend CycloElem operator-(const CycloElem& a);
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b);

  friend bool operator==(const CycloElem& a, const CycloElem& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const CycloElem& a) { return os << a.str(); }

 private:
  void require_same_field(const CycloElem& o) const;

  FieldRef field_;
  std::vector<Rational> coords_;
};

CycloElem embed_rational(const Rational& q, const FieldRef& field);
/// z^k reduced modulo Phi_d; k may be negative.
CycloElem zeta_pow(const FieldRef& field, std::int64_t k);
/// Multiplicative inverse via extended gcd with Phi_d; throws DivisionByZero.
CycloElem inv(const CycloElem& a);
CycloElem pow(const CycloElem& a, std::uint64_t e);

/// The automorphism z -> z^k, gcd(k, d) = 1.
CycloElem galois_act(const CycloElem& a, std::int64_t k);
/// Frobenius element tau_p: z -> z^p. Throws RamifiedPrime when p | d.
CycloElem frobenius(const CycloElem& a, std::uint64_t p);

/// Minimum p-adic valuation of the coordinates; +inf for zero.
Valuation val_min(const CycloElem& a, std::uint64_t p);

// Hooks for TruncSeries<CycloElem>.
inline CycloElem zero_like(const CycloElem& a) { return CycloElem::zero(a.field()); }
inline CycloElem one_like(const CycloElem& a) { return CycloElem::one(a.field()); }
bool same_ring(const CycloElem& a, const CycloElem& b);
inline CycloElem times_int(const CycloElem& a, std::int64_t n) { return a * Rational(static_cast<long>(n)); }
inline CycloElem div_int(const CycloElem& a, std::int64_t n) {
  return a * (Rational(1) / Rational(static_cast<long>(n)));
}

class ResidueRing;
using ResidueRingRef = std::shared_ptr<const ResidueRing>;

/// F_p[T]/(Phi_d mod p), standing in for O_K/pO_K. Interned per (d, p).
class ResidueRing {
 public:
  static ResidueRingRef get(std::uint32_t d, std::uint64_t p);

  std::uint32_t conductor() const noexcept { return d_; }
  std::uint64_t prime() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return phi_; }
  /// Residue coordinates of T^k for 0 <= k < d.
  const std::vector<std::uint64_t>& power(std::uint32_t k) const { return powers_.at(k); }

  ResidueRing(std::uint32_t d, std::uint64_t p);

 private:
  std::uint32_t d_;
  std::uint64_t p_;
  std::uint32_t phi_;
  std::vector<std::vector<std::uint64_t>> powers_;
};

class ResidueElem {
 public:
  ResidueElem(ResidueRingRef ring, std::vector<std::uint64_t> coeffs);

  static ResidueElem zero(const ResidueRingRef& ring);
  static ResidueElem one(const ResidueRingRef& ring);

  const ResidueRingRef& ring() const noexcept { return ring_; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  ResidueElem& operator+=(const ResidueElem& o);
  ResidueElem& operator-=(const ResidueElem& o);
  ResidueElem& operator*=(const ResidueElem& o);

  friend ResidueElem operator+(ResidueElem a, const ResidueElem& b) { return a += b; }
  friend ResidueElem operator-(ResidueElem a, const ResidueElem& b) { return a -= b; }
  friend ResidueElem operator*(ResidueElem a, const ResidueElem& b) { return a *= b; }
  friend ResidueElem operator-(const ResidueElem& a);
  friend bool operator==(const ResidueElem& a, const ResidueElem& b);

  /// Polynomial notation in T, e.g. "T + 2*T^3".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ResidueElem& a) { return os << a.str(); }

 private:
  void require_same_ring(const ResidueElem& o) const;

  ResidueRingRef ring_;
  std::vector<std::uint64_t> coeffs_;
};

ResidueElem pow(const ResidueElem& a, std::uint64_t e);
ResidueElem times_int(const ResidueElem& a, std::int64_t n);
inline ResidueElem zero_like(const ResidueElem& a) { return ResidueElem::zero(a.ring()); }
inline ResidueElem one_like(const ResidueElem& a) { return ResidueElem::one(a.ring()); }
inline bool same_ring(const ResidueElem& a, const ResidueElem& b) { return a.ring() == b.ring(); }

/// Reduction modulo p of a p-integral element; throws NonIntegral otherwise.
ResidueElem residue_project(const CycloElem& a, std::uint64_t p);
ResidueElem residue_project(const CycloElem& a, const ResidueRingRef& ring);
ResidueElem residue_from_int(const ResidueRingRef& ring, const Integer& n);

}  // namespace abelcong
