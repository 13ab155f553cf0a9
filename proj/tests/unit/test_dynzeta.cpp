#include <doctest.h>

#include "abelcong/congruence.hpp"
#include "abelcong/dynzeta.hpp"
#include "abelcong/error.hpp"
#include "../support.hpp"

using namespace abelcong;
using namespace abelcong::testing;

namespace {

Rational r(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

std::vector<Integer> lucas_fix(std::size_t n) {
  std::vector<Integer> v;
  Integer a = 1, b = 3;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(a);
    Integer c = a + b;
    a = b;
    b = c;
  }
  return v;
}

TruncSeries<Rational> minus_log_one_minus_x(std::size_t prec) {
  std::vector<Rational> c{Rational(0)};
  for (std::size_t n = 1; n < prec; ++n) c.push_back(r(1, static_cast<long>(n)));
  return TruncSeries<Rational>(std::move(c));
}

TruncSeries<Rational> x_over(long q, std::size_t prec) {
  std::vector<Rational> c(prec, Rational(0));
  c[1] = r(1, q);
  return TruncSeries<Rational>(std::move(c));
}

}  // namespace

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(49) == 0);
  CHECK_THROWS_AS(mobius(0), InvalidArgument);
}

TEST_CASE("orbit_invert examples") {
  const auto one = orbit_invert({1, 1, 1, 1, 1});
  CHECK(one[0].value == 1);
  for (std::size_t i = 1; i < one.size(); ++i) CHECK(one[i].value == 0);
  CHECK(all_realizable(one));

  // primitive periodic orbits of the golden-mean shift (tests/oracles/dynzeta_oracle.py)
  const std::vector<long> expected = {1, 1, 1, 1, 2, 2, 4, 5, 8, 11, 18, 25, 40, 58, 90, 135, 210, 316, 492, 750};
  const auto luc = orbit_invert(lucas_fix(20));
  REQUIRE(luc.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) CHECK(luc[i].value == expected[i]);
  CHECK(luc[3].value == 1);  // (7 - 3) / 4
  CHECK(all_realizable(luc));

  const auto bad = orbit_invert({1, 2});
  CHECK(bad[1].value == r(1, 2));
  CHECK_FALSE(bad[1].integral);
  CHECK_FALSE(all_integral(bad));

  const auto neg = orbit_invert({3, 1});
  CHECK(neg[1].integral);
  CHECK_FALSE(neg[1].nonnegative);
  CHECK(all_integral(neg));
  CHECK_FALSE(all_realizable(neg));
}

TEST_CASE("zeta coefficients") {
  const auto z1 = zeta_coeffs(std::vector<Integer>(10, 1), 10);
  CHECK(z1.precision() == 11);
  for (const auto& c : z1.coeffs()) CHECK(c == 1);
  const auto zl = zeta_coeffs(lucas_fix(20), 20);
  Integer a = 1, b = 1;
  for (std::size_t n = 0; n <= 20; ++n) {
    CHECK(zl[n] == Rational(a));
    Integer c = a + b;
    a = b;
    b = c;
  }
  const auto z0 = zeta_coeffs(std::vector<Integer>(6, 0), 6);
  CHECK(z0[0] == 1);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(z0[n] == 0);
  CHECK_THROWS_AS(zeta_coeffs(lucas_fix(3), 5), OutOfRange);
}

TEST_CASE("fix_from_orbits round trip on random realizable data") {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    std::vector<Integer> orbits;
    const auto len = static_cast<std::size_t>(uniform(rng, 1, 24));
    for (std::size_t i = 0; i < len; ++i) orbits.push_back(Integer(static_cast<long>(uniform(rng, 0, 40))));
    std::vector<Integer> fix;
    for (std::uint64_t n = 1; n <= len; ++n) fix.push_back(fix_from_orbits(orbits, n));
    const auto inv = orbit_invert(fix);
    REQUIRE(all_realizable(inv));
    for (std::size_t i = 0; i < len; ++i) CHECK(inv[i].value == Rational(orbits[i]));
  }
}

TEST_CASE("gauss congruences of fix counts match integrality of the orbit counts") {
  Rng rng(62);
  for (int t = 0; t < 60; ++t) {
    std::vector<Integer> fix;
    const std::size_t len = 20;
    if (t % 2) {
      std::vector<Integer> orbits;
      for (std::size_t i = 0; i < len; ++i) orbits.push_back(Integer(static_cast<long>(uniform(rng, 0, 20))));
      for (std::uint64_t n = 1; n <= len; ++n) fix.push_back(fix_from_orbits(orbits, n));
      if (t % 4 == 1) fix[static_cast<std::size_t>(uniform(rng, 1, len - 1))] += 1;
    } else {
      for (std::size_t i = 0; i < len; ++i) fix.push_back(Integer(static_cast<long>(uniform(rng, 0, 30))));
    }
    ScanConfig cfg;
    cfg.mode = CongruenceMode::gauss;
    cfg.p_min = 2;
    cfg.p_max = 20;
    cfg.max_index = 20;
    const bool gauss = scan(SequenceSource(spec::FixCounts{fix}), cfg).verdict() == Verdict::holds_to_bound;
    CHECK(gauss == all_integral(orbit_invert(fix)));
  }
}

TEST_CASE("zeta functions of gauss sequences are integral") {
  Rng rng(63);
  for (int t = 0; t < 10; ++t) {
    std::vector<Integer> orbits;
    for (int i = 0; i < 16; ++i) orbits.push_back(Integer(static_cast<long>(uniform(rng, 0, 9))));
    std::vector<Integer> fix;
    for (std::uint64_t n = 1; n <= 16; ++n) fix.push_back(fix_from_orbits(orbits, n));
    const auto z = zeta_coeffs(fix, 16);
    for (const auto& c : z.coeffs()) CHECK(c.is_integer());
    TruncSeries<Rational> s = z;
    for (std::size_t n = 0; n < s.precision(); ++n) s[n] = n ? Rational(fix[n - 1], Integer(static_cast<long>(n))) : 0;
    for (std::uint64_t p : primes_in(2, 16)) {
      CHECK(dwork_check(s, p, 17).holds);
      CHECK(exp_integrality_crosscheck(s, p, 17).agree());
    }
  }
}

TEST_CASE("dwork examples") {
  const auto s = minus_log_one_minus_x(30);
  CHECK(dwork_check(s, 5, 30).holds);
  const auto x3 = x_over(3, 10);
  const auto v = dwork_check(x3, 3, 10);
  CHECK_FALSE(v.holds);
  CHECK(v.witness_exponent == 1u);
  CHECK(v.witness_valuation == Valuation(0));
  const auto zero = TruncSeries<Rational>::zero(Rational(0), 10);
  CHECK(dwork_check(zero, 3, 10).holds);

  const auto c1 = exp_integrality_crosscheck(minus_log_one_minus_x(30), 3, 30);
  CHECK(c1.dwork_holds);
  CHECK(c1.exp_integral);
  const auto c2 = exp_integrality_crosscheck(x3, 3, 10);
  CHECK_FALSE(c2.dwork_holds);
  CHECK_FALSE(c2.exp_integral);
  CHECK(c2.agree());
  CHECK(exp_integrality_crosscheck(zero, 2, 10).agree());

  CHECK_THROWS_AS(dwork_check(x_over(1, 5) + TruncSeries<Rational>::constant(1, 5), 3, 5), InvalidArgument);
  const auto f8 = CycloField::get(8);
  const TruncSeries<CycloElem> s8({CycloElem::zero(f8), zeta_pow(f8, 1)});
  CHECK_THROWS_AS(dwork_check(s8, 2, 2), RamifiedPrime);
  CHECK(dwork_check(s8, 3, 2).holds);
}

TEST_CASE("dwork test over a cyclotomic field") {
  // s = sum zeta^n x^n / n = -log(1 - zeta x): exp(s) = 1/(1 - zeta x) is integral
  const auto f = CycloField::get(12);
  std::vector<CycloElem> c{CycloElem::zero(f)};
  for (long n = 1; n < 40; ++n) c.push_back(zeta_pow(f, n) * r(1, n));
  const TruncSeries<CycloElem> s(c);
  for (std::uint64_t p : {5, 7, 11, 13}) {
    CHECK(dwork_check(s, p, 40).holds);
    CHECK(exp_integrality_crosscheck(s, p, 40).agree());
  }
}
