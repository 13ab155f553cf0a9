#pragma once

/**
 * @file pcurvature.hpp
 * @brief p-curvature of first-order operators d/dx - eta~ over O_K/pO_K.
 *
 * For x*eta = sum a_n x^n with rational a_0 and an integer scale lambda
 * making lambda^n a_n integral, eta~(x) = lambda*eta(lambda*x) - a_0/x
 * = sum_{n>=1} b_n x^{n-1} with b_n = lambda^n a_n. Its p-curvature
 * Delta^p(1), Delta(f) = f' - eta~ f, is computed two ways:
 *   - jacobson_residue:  -(eta~^{(p-1)} + eta~^p)   (odd p only)
 *   - pcurv_iterate:     p explicit applications of Delta to 1
 * Both work in F_p[T]/(Phi_d mod p) and report results modulo x^N.
 */

#include <cstdint>
#include <optional>

#include "abelcong/cyclotomic.hpp"
#include "abelcong/sequences.hpp"
#include "abelcong/series.hpp"

namespace abelcong {

using ResidueSeries = TruncSeries<ResidueElem>;

struct EtaTilde {
  Rational a0;
  Integer lambda;
  /// b_n = lambda^n a_n for n >= 1, b_0 = 0.
  SequenceSource b;
  bool lambda_heuristic = false;

  const FieldRef& field() const { return b.field(); }
};

/// Splits off a_0 and rescales. Throws NonRationalResidue when a_0 is not
/// rational and InvalidArgument when lambda < 1 or the sequence has
/// negative-index terms.
EtaTilde strip_and_rescale(const SequenceSource& x_eta, const Integer& lambda);

/// lcm of the coordinate denominators of a_1 .. a_depth; a heuristic
/// Eisenstein constant.
Integer suggest_lambda(const SequenceSource& x_eta, std::int64_t depth = 50);

/// eta~ reduced modulo p, known modulo x^precision. Throws NonIntegral when
/// some b_n is not p-integral (lambda is wrong for this p).
ResidueSeries reduce_eta(const EtaTilde& et, std::uint64_t p, std::size_t precision);

/// f -> f' - eta f; precision drops by one.
ResidueSeries apply_delta(const ResidueSeries& eta, const ResidueSeries& f);

/// Delta^k(f).
ResidueSeries delta_power(const ResidueSeries& eta, const ResidueSeries& f, std::uint64_t k);

/// Jacobson's closed form -(eta~^{(p-1)} + eta~^p) mod p, modulo x^N.
/// Requires p odd, p not dividing d*lambda, N >= 2p.
ResidueSeries jacobson_residue(const EtaTilde& et, std::uint64_t p, std::size_t order);

/// Delta^p(1) by p-fold iteration, modulo x^N. p = 2 allowed.
ResidueSeries pcurv_iterate(const EtaTilde& et, std::uint64_t p, std::size_t order);

struct PCurvatureVerdict {
  std::uint64_t p = 0;
  bool zero = true;
  std::size_t order = 0;
  /// Smallest exponent with a non-zero coefficient.
  std::optional<std::size_t> witness_exponent;
};

/// Zero test of Delta^p(1) to order N (Jacobson for odd p, iteration for p = 2).
PCurvatureVerdict pcurv_is_zero(const EtaTilde& et, std::uint64_t p, std::size_t order);

/// Largest n whose residue coefficient (exponent (n-1)p) lies below x^N.
std::int64_t residue_index_bound(std::uint64_t p, std::size_t order);

}  // namespace abelcong
