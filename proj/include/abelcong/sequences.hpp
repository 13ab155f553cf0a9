#pragma once

/**
 * @file sequences.hpp
 * @brief Coefficient sequences n -> a_n in Q(zeta_d).
 *
 * Generators cover hypergeometric Pochhammer quotients, their Galois-mixed
 * sums, constant terms of powers of Laurent polynomials and of traces of
 * matrix powers, periodic-point counts, and explicit finitely supported
 * bilateral lists. All of them sit behind SequenceSource, a cheap-to-copy
 * handle whose term(n) is a pure function (memoized internally under a lock).
 */

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abelcong/cyclotomic.hpp"
#include "abelcong/rational.hpp"

namespace abelcong {

/// Multiset of rationals in (0, 1], kept sorted.
class ParamTuple {
 public:
  ParamTuple() = default;
  explicit ParamTuple(std::vector<Rational> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Rational& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool contains(const Rational& q) const;
  /// lcm of the reduced denominators (1 for the empty tuple).
  std::uint64_t denominator_lcm() const;

  std::string str() const;

  friend bool operator==(const ParamTuple&, const ParamTuple&) = default;

 private:
  std::vector<Rational> entries_;
};

/// (a_1)_n ... (a_r)_n / ((b_1)_n ... (b_s)_n); equals 1 at n = 0.
Rational pochhammer_ratio(const ParamTuple& alpha, const ParamTuple& beta, std::uint64_t n);

/// Fractional part, except that integers map to 1.
Rational bracket(const Rational& x);
/// <k t> componentwise, re-sorted.
ParamTuple bracket(const ParamTuple& t, std::int64_t k);

/// lcm of the denominators of all entries of alpha and beta.
std::uint64_t parameter_lcm(const ParamTuple& alpha, const ParamTuple& beta);

/// sum over 1 <= k <= d, gcd(k, d) = 1, of xi^k * Q_{<k alpha>, <k beta>}(n).
CycloElem mixed_coeff(const ParamTuple& alpha, const ParamTuple& beta, std::uint64_t d, const CycloElem& xi,
                      std::uint64_t n);

using Exponent = std::vector<std::int64_t>;

/// Sparse Laurent polynomial in r commuting variables over Q(zeta_d).
class LaurentPoly {
 public:
  LaurentPoly(FieldRef field, std::size_t nvars);

  static LaurentPoly constant(const CycloElem& c, std::size_t nvars);
  static LaurentPoly monomial(const CycloElem& c, Exponent e);

  /// Adds c * x^e (merging with an existing term).
  void add_term(const Exponent& e, const CycloElem& c);

  const FieldRef& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponent, CycloElem>& terms() const noexcept { return terms_; }

  CycloElem constant_term() const;
  bool is_zero() const { return terms_.empty(); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void require_compatible(const LaurentPoly& o) const;

  FieldRef field_;
  std::size_t nvars_;
  std::map<Exponent, CycloElem> terms_;  // no zero coefficients stored
};

/// Constant term of lambda^n.
CycloElem laurent_ct(const LaurentPoly& lambda, std::uint64_t n);

/// Row-major matrix of Laurent polynomials sharing field and variable count.
class LaurentMatrix {
 public:
  LaurentMatrix(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries);

  static LaurentMatrix identity(const FieldRef& field, std::size_t nvars, std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  const FieldRef& field() const { return entries_.front().field(); }
  std::size_t nvars() const { return entries_.front().nvars(); }

  LaurentPoly trace() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<LaurentPoly> entries_;
};

/// Constant term of Tr(A^n); A^0 is the identity. Throws on non-square A.
CycloElem matrix_trace_ct(const LaurentMatrix& a, std::uint64_t n);

/// |Fix(f^n)| = sum_{d | n} d * O_d, with orbits[0] = O_1. Throws OutOfRange
/// when n exceeds the supplied orbit data.
Integer fix_from_orbits(const std::vector<Integer>& orbits, std::uint64_t n);

namespace spec {

struct Hypergeometric {
  ParamTuple alpha, beta;
  Rational scale{1};
};

struct MixedHypergeometric {
  ParamTuple alpha, beta;
  std::uint32_t d = 1;
  std::int64_t xi_power = 1;
};

struct LaurentCT {
  LaurentPoly lambda;
};

struct MatrixTraceCT {
  LaurentMatrix matrix;
};

/// counts[i] = number of orbits of exact size i + 1.
struct Orbits {
  std::vector<Integer> counts;
};

/// counts[i] = |Fix(f^{i+1})|.
struct FixCounts {
  std::vector<Integer> counts;
};

/// Finitely supported bilateral sequence: a_{offset + i} = terms[i], zero elsewhere.
struct Explicit {
  std::int64_t offset = 0;
  std::vector<CycloElem> terms;
  FieldRef field;
};

}  // namespace spec

using SequenceSpec = std::variant<spec::Hypergeometric, spec::MixedHypergeometric, spec::LaurentCT,
                                  spec::MatrixTraceCT, spec::Orbits, spec::FixCounts, spec::Explicit>;

/// JSON "kind" tag of a spec variant.
std::string kind_name(const SequenceSpec& s);

/// Checks the variant's own invariants; throws InvalidArgument.
void validate(const SequenceSpec& s);

class SequenceSource {
 public:
  explicit SequenceSource(SequenceSpec spec);

  /// Wraps an arbitrary pure function. a_n is taken to be 0 below min_index;
  /// max_index, when set, bounds the indices that may be requested.
  static SequenceSource from_function(FieldRef field, std::function<CycloElem(std::int64_t)> fn,
                                      std::int64_t min_index = 0,
                                      std::optional<std::int64_t> max_index = std::nullopt,
                                      std::string label = "function");

  CycloElem term(std::int64_t n) const;

  const FieldRef& field() const;
  /// a_n = 0 for every n < min_index().
  std::int64_t min_index() const;
  /// Largest index with data; nullopt when unbounded.
  std::optional<std::int64_t> max_index() const;
  /// The generating spec, or nullptr for function-backed sources.
  const SequenceSpec* spec() const;
  const std::string& label() const;

  struct Impl;

 private:
  explicit SequenceSource(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

}  // namespace abelcong
