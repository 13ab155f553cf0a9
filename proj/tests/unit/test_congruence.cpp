#include <doctest.h>

#include "abelcong/congruence.hpp"
#include "abelcong/error.hpp"
#include "../support.hpp"

using namespace abelcong;
using namespace abelcong::testing;

namespace {

Rational r(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }
ParamTuple tup(std::initializer_list<Rational> v) { return ParamTuple(std::vector<Rational>(v)); }

SequenceSource constant_seq(const CycloElem& c) { return SequenceSource(spec::Explicit{0, {c}, c.field()}); }

CycloElem sqrt2() {
  const auto f = CycloField::get(8);
  return zeta_pow(f, 1) + zeta_pow(f, 7);
}

SequenceSource central_binomial() { return SequenceSource(spec::Hypergeometric{tup({r(1, 2)}), tup({r(1)}), r(4)}); }

SequenceSource lucas() {
  const auto q = CycloField::get(1);
  auto c = [&](long v) { return LaurentPoly::constant(embed_rational(v, q), 0); };
  return SequenceSource(spec::MatrixTraceCT{LaurentMatrix(2, 2, {c(1), c(1), c(1), c(0)})});
}

SequenceSource from_rationals(std::function<Rational(std::int64_t)> fn, std::int64_t min_index = 0) {
  const auto q = CycloField::get(1);
  return SequenceSource::from_function(
      q, [fn, q](std::int64_t n) { return embed_rational(fn(n), q); }, min_index);
}

// Random sequence over Q(zeta_d) with small denominators and a bilateral window.
SequenceSource random_sequence(Rng& rng, const FieldRef& f, std::int64_t offset, std::size_t len) {
  std::vector<CycloElem> t;
  for (std::size_t i = 0; i < len; ++i) t.push_back(random_cyclo(rng, f, 20, uniform(rng, 1, 2)));
  return SequenceSource(spec::Explicit{offset, std::move(t), f});
}

}  // namespace

TEST_CASE("cartier_check examples") {
  const auto rec = cartier_check(constant_seq(sqrt2()), 3, 30);
  CHECK(rec.status == PrimeStatus::violation);
  REQUIRE(rec.witness);
  CHECK(rec.witness->n == 0);
  CHECK(rec.witness->valuation == Valuation(0));
  CHECK(rec.witness->required == Valuation(1));

  const auto two_thirds = constant_seq(embed_rational(r(2, 3), CycloField::get(1)));
  for (std::uint64_t p : primes_in(2, 50)) {
    if (p == 3) continue;
    CHECK(cartier_check(two_thirds, p, 200).status == PrimeStatus::holds_to_bound);
    CHECK(gauss_check(two_thirds, p, 200).status == PrimeStatus::holds_to_bound);
  }
  CHECK(cartier_check(two_thirds, 3, 200).status == PrimeStatus::skipped);

  const auto cb = cartier_check(central_binomial(), 5, 100);
  CHECK(cb.status == PrimeStatus::holds_to_bound);
  CHECK(cb.pairs_checked == 21);
  CHECK(cb.index_bound == 100);
  CHECK_THROWS_AS(cartier_check(constant_seq(sqrt2()), 2, 30), RamifiedPrime);
}

TEST_CASE("gauss_check examples") {
  // a_3 - a_1 = 20 - 2 = 18
  CHECK(gauss_check(central_binomial(), 3, 3).status == PrimeStatus::holds_to_bound);
  for (std::uint64_t p : primes_in(2, 100)) CHECK(gauss_check(lucas(), p, 400).status == PrimeStatus::holds_to_bound);
  const auto identity = from_rationals([](std::int64_t n) { return Rational(static_cast<long>(n)); });
  const auto rec = gauss_check(identity, 2, 20);
  CHECK(rec.status == PrimeStatus::violation);
  REQUIRE(rec.witness);
  CHECK(rec.witness->n == 1);
  CHECK(rec.witness->valuation == Valuation(0));
  // n = 0 demands exact equality
  const auto g0 = gauss_check(constant_seq(sqrt2()), 3, 30);
  REQUIRE(g0.witness);
  CHECK(g0.witness->required.is_infinite());
}

TEST_CASE("scan examples") {
  ScanConfig cfg;
  cfg.mode = CongruenceMode::cartier;
  cfg.p_min = 5;
  cfg.p_max = 50;
  cfg.max_index = 300;
  const auto f12 = CycloField::get(12);
  const SequenceSource mixed(spec::MixedHypergeometric{tup({r(1, 4), r(11, 12)}), tup({r(1, 2), r(1)}), 12, 1});
  const auto rep = scan(mixed, cfg);
  CHECK(rep.verdict() == Verdict::holds_to_bound);
  CHECK(rep.primes.size() == 13);

  const SequenceSource f1(spec::Hypergeometric{tup({r(1, 4), r(11, 12)}), tup({r(1, 2), r(1)}), r(1)});
  const auto rep1 = scan(f1, cfg);
  CHECK(rep1.verdict() == Verdict::violation);
  REQUIRE(rep1.first_violation());
  CHECK(rep1.first_violation()->p == 5);
  CHECK(rep1.first_violation()->witness->n == 1);

  cfg.p_min = 14;
  cfg.p_max = 16;
  const auto empty = scan(f1, cfg);
  CHECK(empty.primes.empty());
  CHECK(empty.verdict() == Verdict::holds_to_bound);

  cfg.p_min = 2;
  cfg.p_max = 13;
  cfg.skip = {5};
  const auto rep2 = scan(mixed, cfg);
  CHECK(rep2.primes[0].status == PrimeStatus::skipped);
  CHECK(rep2.primes[0].reason == "ramified");
  CHECK(rep2.primes[2].reason == "skip-list");

  cfg.max_index = 10;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg.p_min = 1;
  cfg.max_index = 100;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
}

TEST_CASE("parallel scans give the same report") {
  ScanConfig cfg;
  cfg.mode = CongruenceMode::gauss;
  cfg.p_min = 2;
  cfg.p_max = 60;
  cfg.max_index = 240;
  const auto serial = scan(central_binomial(), cfg);
  cfg.threads = 4;
  const auto parallel = scan(central_binomial(), cfg);
  REQUIRE(serial.primes.size() == parallel.primes.size());
  for (std::size_t i = 0; i < serial.primes.size(); ++i) {
    CHECK(serial.primes[i].p == parallel.primes[i].p);
    CHECK(serial.primes[i].status == parallel.primes[i].status);
    CHECK(serial.primes[i].pairs_checked == parallel.primes[i].pairs_checked);
  }
}

TEST_CASE("gauss implies cartier, and witnesses re-verify") {
  Rng rng(31);
  for (std::uint32_t d : {1u, 3u, 4u}) {
    const auto f = CycloField::get(d);
    for (int t = 0; t < 15; ++t) {
      const auto seq = random_sequence(rng, f, -uniform(rng, 0, 3), 12);
      for (std::uint64_t p : {5, 7, 11}) {
        const auto g = gauss_check(seq, p, 40);
        const auto c = cartier_check(seq, p, 40);
        if (g.status == PrimeStatus::holds_to_bound) CHECK(c.status == PrimeStatus::holds_to_bound);
        for (const auto* rec : {&g, &c})
          if (rec->witness)
            CHECK(reverify_witness(seq, rec == &g ? CongruenceMode::gauss : CongruenceMode::cartier, p, *rec->witness));
      }
    }
  }
}

TEST_CASE("gauss holds in its prime-power form") {
  const auto seqs = {central_binomial(), lucas()};
  for (const auto& seq : seqs)
    for (std::uint64_t p : {3, 5, 7}) {
      const std::int64_t bound = 300;
      REQUIRE(gauss_check(seq, p, bound).status == PrimeStatus::holds_to_bound);
      const auto sp = static_cast<std::int64_t>(p);
      for (std::int64_t m = 1; m * sp <= bound; ++m)
        for (std::int64_t ps = 1; m * ps * sp <= bound; ps *= sp) {
          const auto diff = seq.term(m * ps * sp) - frobenius(seq.term(m * ps), p);
          CHECK(val_min(diff, p) >= Valuation(1) + padic_val(Integer(static_cast<long>(ps)), p));
        }
    }
}

TEST_CASE("cartier verdict is invariant under lambda^n scaling at good primes") {
  Rng rng(32);
  const auto f = CycloField::get(4);
  for (int t = 0; t < 10; ++t) {
    std::vector<CycloElem> terms;
    for (int i = 0; i < 30; ++i) terms.push_back(random_cyclo(rng, f, 4));
    const SequenceSource a(spec::Explicit{0, terms, f});
    const long lam = uniform(rng, 2, 12);
    const auto scaled = SequenceSource::from_function(f, [a, lam](std::int64_t n) {
      return a.term(n) * pow(Rational(lam), static_cast<std::uint64_t>(n));
    });
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
      if (lam % static_cast<long>(p) == 0) continue;
      CHECK(cartier_check(a, p, 29).status == cartier_check(scaled, p, 29).status);
    }
  }
}

TEST_CASE("prefix diagnostic") {
  const auto q = CycloField::get(1);
  const auto neg = SequenceSource(spec::Explicit{-1, {CycloElem::one(q), CycloElem::zero(q)}, q});
  CHECK(prefix_diagnostic(neg).nonzero_negative_index == -1);
  CHECK(prefix_diagnostic(constant_seq(sqrt2())).irrational_constant);
  const auto clean = SequenceSource(spec::Explicit{0, {embed_rational(5, q), embed_rational(2, q)}, q});
  CHECK(prefix_diagnostic(clean).clean());
  CHECK(prefix_diagnostic(clean).flags().empty());
}

TEST_CASE("puiseux rescaling") {
  const auto q = CycloField::get(1);
  const auto p = SequenceSource(spec::Explicit{0, {CycloElem::zero(q), embed_rational(r(1, 3), q)}, q});
  const auto s3 = puiseux_rescale(p, 3, ExpansionPoint::finite);
  CHECK(s3.term(1) == CycloElem::one(q));
  CHECK(s3.term(2).is_zero());
  const auto id = puiseux_rescale(p, 1, ExpansionPoint::finite);
  for (long n = -2; n < 4; ++n) CHECK(id.term(n) == p.term(n));
  const auto inf = puiseux_rescale(p, 2, ExpansionPoint::infinity);
  CHECK(inf.term(1) == embed_rational(r(-2, 3), q));
  CHECK_THROWS_AS(puiseux_rescale(p, 0, ExpansionPoint::finite), InvalidArgument);
}
