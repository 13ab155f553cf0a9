#pragma once

/**
 * @file dynzeta.hpp
 * @brief Periodic-point counts, Artin-Mazur zeta coefficients and Dwork's test.
 *
 *   |Fix(f^n)| = sum_{d | n} d O_d,     Z_f(x) = exp(sum_{n>=1} |Fix(f^n)| x^n / n).
 *
 * dwork_check tests s^tau(x^p) - p s(x) in p x O[[x]], which is equivalent
 * to exp(s) having p-integral coefficients.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "abelcong/cyclotomic.hpp"
#include "abelcong/rational.hpp"
#include "abelcong/sequences.hpp"
#include "abelcong/series.hpp"

namespace abelcong {

int mobius(std::uint64_t n);

struct OrbitCount {
  std::uint64_t n = 0;
  Rational value;
  bool integral = true;
  bool nonnegative = true;
};

/// O_n = (1/n) sum_{d | n} mu(n/d) fix_d for n = 1 .. fix.size(); fix[0] = |Fix(f)|.
std::vector<OrbitCount> orbit_invert(const std::vector<Integer>& fix);

/// Every O_n integral (the Dold condition on the available range).
bool all_integral(const std::vector<OrbitCount>& orbits);
/// Every O_n a nonnegative integer (realizable on the available range).
bool all_realizable(const std::vector<OrbitCount>& orbits);

/// Coefficients of Z_f at x^0 .. x^N. Needs fix.size() >= N.
TruncSeries<Rational> zeta_coeffs(const std::vector<Integer>& fix, std::size_t order);

struct DworkVerdict {
  std::uint64_t p = 0;
  bool holds = true;
  std::size_t order = 0;
  /// Smallest exponent whose coefficient has valuation < 1.
  std::optional<std::size_t> witness_exponent;
  Valuation witness_valuation;
};

/// Checks the coefficients of x^1 .. x^{N-1} of s^tau(x^p) - p s(x); s must
/// have zero constant term and precision >= N. Throws RamifiedPrime when p | d.
DworkVerdict dwork_check(const TruncSeries<CycloElem>& s, std::uint64_t p, std::size_t order);
DworkVerdict dwork_check(const TruncSeries<Rational>& s, std::uint64_t p, std::size_t order);

struct ExpCrosscheck {
  bool dwork_holds = true;
  bool exp_integral = true;
  /// First exponent where exp(s) is not p-integral.
  std::optional<std::size_t> exp_witness;
  bool agree() const { return dwork_holds == exp_integral; }
};

ExpCrosscheck exp_integrality_crosscheck(const TruncSeries<CycloElem>& s, std::uint64_t p, std::size_t order);
ExpCrosscheck exp_integrality_crosscheck(const TruncSeries<Rational>& s, std::uint64_t p, std::size_t order);

/// sum_{n=1}^{N-1} a_n x^n / n, known modulo x^N.
TruncSeries<CycloElem> log_series_of(const SequenceSource& seq, std::size_t order);

/// Rational series lifted coefficientwise into Q(zeta_1).
TruncSeries<CycloElem> to_cyclo(const TruncSeries<Rational>& s);

}  // namespace abelcong
