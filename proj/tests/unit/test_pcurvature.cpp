#include <doctest.h>

#include "abelcong/congruence.hpp"
#include "abelcong/error.hpp"
#include "abelcong/pcurvature.hpp"
#include "../support.hpp"

using namespace abelcong;
using namespace abelcong::testing;

namespace {

Rational r(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

/// x*eta with a_0 and a_n = fn(n) for n >= 1.
SequenceSource x_eta(const FieldRef& f, const CycloElem& a0, std::function<CycloElem(std::int64_t)> fn) {
  return SequenceSource::from_function(f, [a0, fn](std::int64_t n) { return n == 0 ? a0 : fn(n); });
}

SequenceSource rational_x_eta(std::function<Rational(std::int64_t)> fn, Rational a0 = 0) {
  const auto q = CycloField::get(1);
  return x_eta(q, embed_rational(a0, q), [fn, q](std::int64_t n) { return embed_rational(fn(n), q); });
}

EtaTilde random_eta(Rng& rng, const FieldRef& f, std::size_t len) {
  std::vector<CycloElem> t{embed_rational(random_rational(rng, 5, 3), f)};
  for (std::size_t i = 1; i <= len; ++i) t.push_back(random_cyclo(rng, f, 6));
  return strip_and_rescale(SequenceSource(spec::Explicit{0, std::move(t), f}), 1);
}

ResidueSeries random_residue_series(Rng& rng, const ResidueRingRef& ring, std::size_t prec) {
  std::vector<ResidueElem> c;
  for (std::size_t i = 0; i < prec; ++i) {
    std::vector<std::uint64_t> v;
    for (std::uint32_t k = 0; k < ring->degree(); ++k)
      v.push_back(static_cast<std::uint64_t>(uniform(rng, 0, static_cast<std::int64_t>(ring->prime()) - 1)));
    c.emplace_back(ring, v);
  }
  return ResidueSeries(std::move(c));
}

}  // namespace

TEST_CASE("strip_and_rescale") {
  const auto ones = strip_and_rescale(rational_x_eta([](std::int64_t) { return Rational(1); }), 1);
  CHECK(ones.a0 == 0);
  for (long n = 1; n < 10; ++n) CHECK(ones.b.term(n) == CycloElem::one(ones.field()));
  CHECK(ones.b.term(0).is_zero());

  // a_n = (1/2)_n / n!, lambda = 4
  const SequenceSource half(spec::Hypergeometric{ParamTuple({r(1, 2)}), ParamTuple({r(1)}), r(1)});
  const auto cb = strip_and_rescale(half, 4);
  CHECK(cb.a0 == 1);
  for (long n = 1; n <= 30; ++n) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
    CHECK(cb.b.term(n) == embed_rational(Rational(binom), cb.field()));
  }

  const auto f8 = CycloField::get(8);
  const auto s2 = zeta_pow(f8, 1) + zeta_pow(f8, 7);
  CHECK_THROWS_AS(strip_and_rescale(SequenceSource(spec::Explicit{0, {s2}, f8}), 1), NonRationalResidue);
  CHECK_THROWS_AS(strip_and_rescale(half, 0), InvalidArgument);
  CHECK(suggest_lambda(half, 10) == 262144);
}

TEST_CASE("jacobson residue examples") {
  const auto one = strip_and_rescale(rational_x_eta([](std::int64_t n) { return Rational(n == 1 ? 1 : 0); }), 1);
  for (std::uint64_t p : {3, 5, 7}) {
    const auto res = jacobson_residue(one, p, 3 * p);
    CHECK(res[0] == -ResidueElem::one(res[0].ring()));
    for (std::size_t k = 1; k < res.precision(); ++k) CHECK(res[k].is_zero());
  }
  const auto geo = strip_and_rescale(rational_x_eta([](std::int64_t) { return Rational(1); }), 1);
  for (std::uint64_t p : {3, 5, 7}) CHECK(jacobson_residue(geo, p, 3 * p).is_zero());
  const auto zero = strip_and_rescale(rational_x_eta([](std::int64_t) { return Rational(0); }), 1);
  CHECK(jacobson_residue(zero, 5, 15).is_zero());
  CHECK_THROWS_AS(jacobson_residue(one, 2, 10), InvalidArgument);
  CHECK_THROWS_AS(jacobson_residue(one, 5, 9), InvalidArgument);
  const auto scaled = strip_and_rescale(rational_x_eta([](std::int64_t) { return Rational(1); }), 15);
  CHECK_THROWS_AS(jacobson_residue(scaled, 5, 15), InvalidArgument);
}

TEST_CASE("pcurv_iterate examples") {
  const auto one = strip_and_rescale(rational_x_eta([](std::int64_t n) { return Rational(n == 1 ? 1 : 0); }), 1);
  const auto d3 = pcurv_iterate(one, 3, 9);
  CHECK(d3[0] == -ResidueElem::one(d3[0].ring()));
  CHECK(d3.precision() == 9);
  const auto zero = strip_and_rescale(rational_x_eta([](std::int64_t) { return Rational(0); }), 1);
  for (std::uint64_t p : {2, 3, 5}) CHECK(pcurv_iterate(zero, p, 3 * p).is_zero());
  // p = 2: Delta^2(1) = eta^2 - eta' for eta = 1 is 1
  const auto d2 = pcurv_iterate(one, 2, 6);
  CHECK(d2[0] == ResidueElem::one(d2[0].ring()));
}

TEST_CASE("both p-curvature routes agree on random eta") {
  Rng rng(41);
  int count = 0;
  for (std::uint32_t d : {1u, 4u, 8u, 12u})
    for (std::uint64_t p : {3, 5, 7, 11}) {
      const auto f = CycloField::get(d);
      if (f->is_ramified(p)) continue;
      for (int t = 0; t < 2; ++t) {
        const auto et = random_eta(rng, f, 4 * p);
        CHECK(jacobson_residue(et, p, 3 * p) == pcurv_iterate(et, p, 3 * p));
        ++count;
      }
    }
  CHECK(count >= 20);
  const auto et = random_eta(rng, CycloField::get(8), 40);
  CHECK(jacobson_residue(et, 5, 15) == pcurv_iterate(et, 5, 15));
}

TEST_CASE("residue identity ties the p-curvature to cartier congruences of b") {
  Rng rng(42);
  for (std::uint32_t d : {1u, 4u, 12u})
    for (std::uint64_t p : {5, 7, 11}) {
      const auto f = CycloField::get(d);
      if (f->is_ramified(p)) continue;
      const std::size_t order = 3 * p;
      const auto et = random_eta(rng, f, 4 * p);
      const auto sum = -jacobson_residue(et, p, order);
      for (std::size_t k = 0; k < order; ++k) {
        if (k % p) {
          CHECK(sum[k].is_zero());
        } else {
          const auto n = static_cast<std::int64_t>(k / p + 1);
          CHECK(sum[k] == residue_project(frobenius(et.b.term(n), p) - et.b.term(n * static_cast<std::int64_t>(p)), p));
        }
      }
      const auto bound = static_cast<std::int64_t>(p) * residue_index_bound(p, order);
      const bool cartier = cartier_check(et.b, p, bound).status == PrimeStatus::holds_to_bound;
      CHECK(pcurv_is_zero(et, p, order).zero == cartier);
    }
}

TEST_CASE("pcurv_is_zero verdicts") {
  const auto geo = strip_and_rescale(rational_x_eta([](std::int64_t) { return Rational(1); }), 1);
  const auto v = pcurv_is_zero(geo, 7, 21);
  CHECK(v.zero);
  CHECK(v.order == 21);
  const auto one = strip_and_rescale(rational_x_eta([](std::int64_t n) { return Rational(n == 1 ? 1 : 0); }), 1);
  const auto w = pcurv_is_zero(one, 5, 15);
  CHECK_FALSE(w.zero);
  CHECK(w.witness_exponent == 0u);
  const auto zero = strip_and_rescale(rational_x_eta([](std::int64_t) { return Rational(0); }), 1);
  CHECK(pcurv_is_zero(zero, 3, 9).zero);
  CHECK_FALSE(pcurv_is_zero(one, 2, 8).zero);
}

TEST_CASE("non-integral eta~ is reported for the prime") {
  const auto third = strip_and_rescale(rational_x_eta([](std::int64_t) { return r(1, 3); }), 1);
  CHECK_THROWS_AS(jacobson_residue(third, 3, 9), NonIntegral);
  CHECK_THROWS_AS(pcurv_iterate(third, 3, 9), NonIntegral);
  const auto fixed = strip_and_rescale(rational_x_eta([](std::int64_t) { return r(1, 3); }), 3);
  CHECK_NOTHROW(jacobson_residue(fixed, 5, 15));
}

TEST_CASE("Delta^p is linear over series in x^p") {
  Rng rng(43);
  for (std::uint32_t d : {1u, 4u})
    for (std::uint64_t p : {3, 5, 7}) {
      const auto ring = ResidueRing::get(d, p);
      const std::size_t m = 6 * p;
      const auto eta = random_residue_series(rng, ring, m);
      const auto fser = random_residue_series(rng, ring, m);
      const auto g = substitute_power(random_residue_series(rng, ring, m / p), p);
      const auto lhs = delta_power(eta, fser * g, p);
      const auto rhs = g.truncated(lhs.precision()) * delta_power(eta, fser, p);
      CHECK(lhs == rhs);
    }
}
