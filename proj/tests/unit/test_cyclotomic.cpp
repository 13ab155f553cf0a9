#include <doctest.h>

#include "abelcong/cyclotomic.hpp"
#include "abelcong/error.hpp"
#include "../support.hpp"

using namespace abelcong;
using namespace abelcong::testing;

namespace {

CycloElem sqrt2() {
  const auto f = CycloField::get(8);
  return zeta_pow(f, 1) + zeta_pow(f, 7);
}

std::vector<Rational> coords(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return c;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<Integer>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  for (std::uint32_t d = 1; d <= 60; ++d) CHECK(cyclotomic_polynomial(d).size() == euler_phi(d) + 1);
  CHECK(CycloField::get(12) == CycloField::get(12));
}

TEST_CASE("embedding and powers of zeta") {
  const auto f = CycloField::get(8);
  CHECK(embed_rational(Rational(Integer(3), Integer(2)), f).coords() ==
        std::vector<Rational>{Rational(Integer(3), Integer(2)), 0, 0, 0});
  CHECK(zeta_pow(f, 7).coords() == coords({0, 0, 0, -1}));
  CHECK(sqrt2().coords() == coords({0, 1, 0, -1}));
  CHECK(zeta_pow(f, -1) == zeta_pow(f, 7));
  CHECK(zeta_pow(f, 8) == CycloElem::one(f));
}

TEST_CASE("field arithmetic") {
  const auto f = CycloField::get(8);
  CHECK(sqrt2() * sqrt2() == embed_rational(2, f));
  CHECK(inv(embed_rational(2, f)) == embed_rational(Rational(Integer(1), Integer(2)), f));
  CHECK_THROWS_AS(inv(CycloElem::zero(f)), DivisionByZero);
  Rng rng(3);
  for (std::uint32_t d : {1u, 3u, 4u, 5u, 8u, 12u, 15u}) {
    const auto fd = CycloField::get(d);
    for (int i = 0; i < 20; ++i) {
      const auto a = random_nonzero_cyclo(rng, fd, 6, 4);
      const auto b = random_cyclo(rng, fd, 6, 4);
      CHECK(a * inv(a) == CycloElem::one(fd));
      CHECK((b / a) * a == b);
    }
  }
  CHECK_THROWS_AS(sqrt2() + CycloElem::one(CycloField::get(4)), RingMismatch);
}

TEST_CASE("frobenius examples") {
  CHECK(frobenius(sqrt2(), 7) == sqrt2());
  CHECK(frobenius(sqrt2(), 3) == -sqrt2());
  const auto q = embed_rational(Rational(Integer(5), Integer(3)), CycloField::get(1));
  CHECK(frobenius(q, 7) == q);
  CHECK_THROWS_AS(frobenius(sqrt2(), 2), RamifiedPrime);
}

TEST_CASE("frobenius is a ring automorphism of order ord_d(p)") {
  Rng rng(5);
  for (std::uint32_t d : {1u, 3u, 4u, 8u, 12u}) {
    const auto f = CycloField::get(d);
    for (std::uint64_t p : primes_in(2, 50)) {
      if (f->is_ramified(p)) continue;
      const auto ord = multiplicative_order(p, d);
      CHECK(f->degree() % ord == 0);
      for (int i = 0; i < 3; ++i) {
        const auto a = random_cyclo(rng, f, 9, 5), b = random_cyclo(rng, f, 9, 5);
        CHECK(frobenius(a * b, p) == frobenius(a, p) * frobenius(b, p));
        CHECK(frobenius(a + b, p) == frobenius(a, p) + frobenius(b, p));
        auto c = a;
        for (std::uint64_t k = 0; k < ord; ++k) c = frobenius(c, p);
        CHECK(c == a);
      }
    }
  }
}

TEST_CASE("frobenius reduces to the p-th power map") {
  Rng rng(6);
  for (std::uint32_t d : {1u, 3u, 4u, 8u, 12u}) {
    const auto f = CycloField::get(d);
    for (std::uint64_t p : primes_in(2, 50)) {
      if (f->is_ramified(p)) continue;
      for (int i = 0; i < 3; ++i) {
        const auto a = random_cyclo(rng, f, 40, 1);
        CHECK(residue_project(frobenius(a, p), p) == pow(residue_project(a, p), p));
      }
    }
  }
}

TEST_CASE("val_min examples and bounds") {
  const auto f = CycloField::get(8);
  CHECK(val_min(embed_rational(2, f) * sqrt2(), 3) == Valuation(0));
  CHECK(val_min(CycloElem::zero(f), 3).is_infinite());
  const auto a = CycloElem(CycloField::get(3), {Rational(Integer(9), Integer(2)), Rational(3)});
  CHECK(val_min(a, 3) == Valuation(1));
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto f12 = CycloField::get(12);
    const auto x = random_cyclo(rng, f12, 30, 10), y = random_cyclo(rng, f12, 30, 10);
    const auto q = random_nonzero_rational(rng, 30, 10);
    for (std::uint64_t p : {5, 7, 11}) {
      CHECK(val_min(x * y, p) >= val_min(x, p) + val_min(y, p));
      CHECK(val_min(x * q, p) == val_min(x, p) + padic_val(q, p));
    }
  }
}

TEST_CASE("residue projection") {
  const auto q = CycloField::get(1);
  CHECK(residue_project(embed_rational(7, q), 7).is_zero());
  const auto r = residue_project(sqrt2(), 3);
  CHECK(r.coeffs() == std::vector<std::uint64_t>{0, 1, 0, 2});
  CHECK(r.str() == "T + 2*T^3");
  CHECK_THROWS_AS(residue_project(embed_rational(Rational(Integer(1), Integer(3)), q), 3), NonIntegral);
  Rng rng(10);
  const auto f = CycloField::get(12);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_cyclo(rng, f, 30, 4), b = random_cyclo(rng, f, 30, 4);
    for (std::uint64_t p : {5, 7, 13}) {
      CHECK(residue_project(a, p) * residue_project(b, p) == residue_project(a * b, p));
      CHECK(residue_project(a, p) + residue_project(b, p) == residue_project(a + b, p));
    }
  }
}
