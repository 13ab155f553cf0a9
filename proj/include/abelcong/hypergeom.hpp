#pragma once

/**
 * @file hypergeom.hpp
 * @brief Classifiers for hypergeometric parameter tuples.
 *
 * For alpha, beta in (0,1] with common denominator d, the conjugate
 * families are (<k alpha>, <k beta>) for k coprime to d. The interlacing
 * test decides algebraicity of F_{alpha,beta}; the factorial test decides
 * whether prod (x - e(alpha_i)) / prod (x - e(beta_j)) lies in Q(x).
 */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abelcong/rational.hpp"
#include "abelcong/sequences.hpp"

namespace abelcong {

struct ConjugateFamily {
  std::int64_t k = 1;
  ParamTuple alpha, beta;
};

/// The phi(d) pairs (<k alpha>, <k beta>), gcd(k, d) = 1, in increasing k.
std::vector<ConjugateFamily> conjugate_family(const ParamTuple& alpha, const ParamTuple& beta);

/// True iff every conjugate family strictly interlaces on (0, 1]. Throws
/// InvalidArgument when |alpha| != |beta| or the tuples share an entry.
bool is_algebraic_interlacing(const ParamTuple& alpha, const ParamTuple& beta);

/// Signed multiset of roots of unity e(j/m), keyed by the reduced fraction.
class RootMultiset {
 public:
  RootMultiset() = default;
  /// alpha entries count +1, beta entries -1.
  RootMultiset(const ParamTuple& alpha, const ParamTuple& beta);

  void add(const Rational& root, std::int64_t mult);
  const std::map<Rational, std::int64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// True iff, for every denominator m, all j/m with gcd(j, m) = 1 carry the
  /// same multiplicity.
  bool is_galois_stable() const;

 private:
  std::map<Rational, std::int64_t> entries_;
};

bool is_factorial(const ParamTuple& alpha, const ParamTuple& beta);

struct Classification {
  bool algebraic_interlacing = false;
  bool factorial = false;
  std::uint64_t d = 1;
  std::vector<ConjugateFamily> family;
  /// |alpha| == |beta|; the interlacing test needs it.
  bool balanced = true;
};

/// Requires 1 in beta (F_{alpha,beta} normalised as a {r+1}F_r). When the
/// tuples are unbalanced, algebraic_interlacing is false and balanced false.
Classification classify(const ParamTuple& alpha, const ParamTuple& beta);

}  // namespace abelcong
