#include "abelcong/dynzeta.hpp"

#include "abelcong/error.hpp"

namespace abelcong {

int mobius(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("mobius(0) is undefined");
  int mu = 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<OrbitCount> orbit_invert(const std::vector<Integer>& fix) {
  std::vector<OrbitCount> out;
  out.reserve(fix.size());
  for (std::uint64_t n = 1; n <= fix.size(); ++n) {
    Integer total = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      const int mu = mobius(n / d);
      if (mu) total += mu * fix[d - 1];
    }
    OrbitCount o;
    o.n = n;
    o.value = Rational(total, Integer(static_cast<unsigned long>(n)));
    o.integral = o.value.is_integer();
    o.nonnegative = o.value.sign() >= 0;
    out.push_back(std::move(o));
  }
  return out;
}

bool all_integral(const std::vector<OrbitCount>& orbits) {
  for (const auto& o : orbits)
    if (!o.integral) return false;
  return true;
}

bool all_realizable(const std::vector<OrbitCount>& orbits) {
  for (const auto& o : orbits)
    if (!o.integral || !o.nonnegative) return false;
  return true;
}

TruncSeries<Rational> zeta_coeffs(const std::vector<Integer>& fix, std::size_t order) {
  if (fix.size() < order)
    throw OutOfRange("zeta coefficients to x^" + std::to_string(order) + " need " + std::to_string(order) +
                     " fixed-point counts, got " + std::to_string(fix.size()));
  std::vector<Rational> s(order + 1, Rational(0));
  for (std::size_t n = 1; n <= order; ++n) s[n] = Rational(fix[n - 1], Integer(static_cast<unsigned long>(n)));
  return series_exp(TruncSeries<Rational>(std::move(s)));
}

TruncSeries<CycloElem> to_cyclo(const TruncSeries<Rational>& s) {
  const auto q = CycloField::get(1);
  std::vector<CycloElem> c;
  c.reserve(s.precision());
  for (const auto& r : s.coeffs()) c.push_back(embed_rational(r, q));
  return TruncSeries<CycloElem>(std::move(c));
}

DworkVerdict dwork_check(const TruncSeries<CycloElem>& s, std::uint64_t p, std::size_t order) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (s.precision() < order)
    throw InvalidArgument("series known to x^" + std::to_string(s.precision()) + ", order " + std::to_string(order) +
                          " requested");
  DworkVerdict v;
  v.p = p;
  v.order = order;
  if (order == 0) return v;
  if (!s[0].is_zero()) throw InvalidArgument("s must have zero constant term");
  if (s[0].field()->is_ramified(p))
    throw RamifiedPrime("p = " + std::to_string(p) + " divides the conductor " +
                        std::to_string(s[0].field()->conductor()));
  const Rational pq(static_cast<long>(p));
  for (std::size_t k = 1; k < order; ++k) {
    CycloElem c = -(s[k] * pq);
    if (k % p == 0) c += frobenius(s[k / p], p);
    const Valuation val = val_min(c, p);
    if (val < Valuation(1)) {
      v.holds = false;
      v.witness_exponent = k;
      v.witness_valuation = val;
      break;
    }
  }
  return v;
}

DworkVerdict dwork_check(const TruncSeries<Rational>& s, std::uint64_t p, std::size_t order) {
  return dwork_check(to_cyclo(s), p, order);
}

ExpCrosscheck exp_integrality_crosscheck(const TruncSeries<CycloElem>& s, std::uint64_t p, std::size_t order) {
  ExpCrosscheck r;
  r.dwork_holds = dwork_check(s, p, order).holds;
  const auto e = series_exp(s.truncated(order));
  for (std::size_t k = 0; k < e.precision(); ++k) {
    if (val_min(e[k], p) < Valuation(0)) {
      r.exp_integral = false;
      r.exp_witness = k;
      break;
    }
  }
  return r;
}

ExpCrosscheck exp_integrality_crosscheck(const TruncSeries<Rational>& s, std::uint64_t p, std::size_t order) {
  return exp_integrality_crosscheck(to_cyclo(s), p, order);
}

TruncSeries<CycloElem> log_series_of(const SequenceSource& seq, std::size_t order) {
  std::vector<CycloElem> c;
  c.reserve(order);
  if (order > 0) c.push_back(CycloElem::zero(seq.field()));
  for (std::size_t n = 1; n < order; ++n)
    c.push_back(seq.term(static_cast<std::int64_t>(n)) * Rational(1, static_cast<long>(n)));
  return TruncSeries<CycloElem>(std::move(c));
}

}  // namespace abelcong
