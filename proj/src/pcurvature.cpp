#include "abelcong/pcurvature.hpp"

#include "abelcong/error.hpp"

namespace abelcong {

EtaTilde strip_and_rescale(const SequenceSource& x_eta, const Integer& lambda) {
  if (lambda < 1) throw InvalidArgument("lambda must be a positive integer");
  for (std::int64_t n = x_eta.min_index(); n < 0; ++n)
    if (!x_eta.term(n).is_zero())
      throw InvalidArgument("x*eta has a non-zero term at negative index " + std::to_string(n));
  const CycloElem a0 = x_eta.term(0);
  if (!a0.is_rational()) throw NonRationalResidue("a_0 = " + a0.str() + " is not rational");
  const Rational lam(lambda);
  auto fn = [x_eta, lam](std::int64_t n) -> CycloElem {
    if (n <= 0) return CycloElem::zero(x_eta.field());
    return x_eta.term(n) * pow(lam, static_cast<std::uint64_t>(n));
  };
  return EtaTilde{a0.as_rational(), lambda,
                  SequenceSource::from_function(x_eta.field(), fn, 0, x_eta.max_index(), "eta~(" + x_eta.label() + ")")};
}

Integer suggest_lambda(const SequenceSource& x_eta, std::int64_t depth) {
  Integer l = 1;
  std::int64_t upper = depth;
  if (x_eta.max_index()) upper = std::min(upper, *x_eta.max_index());
  for (std::int64_t n = 1; n <= upper; ++n) l = lcm(l, x_eta.term(n).denominator());
  return l;
}

namespace {

void require_good_prime(const EtaTilde& et, std::uint64_t p, std::size_t order) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (et.field()->is_ramified(p))
    throw RamifiedPrime("p = " + std::to_string(p) + " divides the conductor " +
                        std::to_string(et.field()->conductor()));
  if (mpz_divisible_ui_p(et.lambda.get_mpz_t(), p))
    throw InvalidArgument("p = " + std::to_string(p) + " divides lambda = " + et.lambda.get_str());
  if (order < 2 * p)
    throw InvalidArgument("p-curvature order " + std::to_string(order) + " is below 2p = " + std::to_string(2 * p));
}

}  // namespace

ResidueSeries reduce_eta(const EtaTilde& et, std::uint64_t p, std::size_t precision) {
  const auto ring = ResidueRing::get(et.field()->conductor(), p);
  std::vector<ResidueElem> c;
  c.reserve(precision);
  for (std::size_t k = 0; k < precision; ++k) {
    const auto n = static_cast<std::int64_t>(k + 1);
    const CycloElem b = et.b.term(n);
    try {
      c.push_back(residue_project(b, ring));
    } catch (const NonIntegral&) {
      throw NonIntegral("b_" + std::to_string(n) + " = " + b.str() + " is not " + std::to_string(p) +
                        "-integral; lambda = " + et.lambda.get_str() + " does not clear it");
    }
  }
  return ResidueSeries(std::move(c));
}

ResidueSeries apply_delta(const ResidueSeries& eta, const ResidueSeries& f) {
  return series_derive(f) - eta * f;
}

ResidueSeries delta_power(const ResidueSeries& eta, const ResidueSeries& f, std::uint64_t k) {
  ResidueSeries out = f;
  for (std::uint64_t i = 0; i < k; ++i) out = apply_delta(eta, out);
  return out;
}

ResidueSeries jacobson_residue(const EtaTilde& et, std::uint64_t p, std::size_t order) {
  require_good_prime(et, p, order);
  if (p == 2) throw InvalidArgument("jacobson_residue requires an odd prime");
  // Each derivative costs one order: eta~ mod x^{N+p-1} gives eta~^{(p-1)} mod x^N.
  const ResidueSeries eta = reduce_eta(et, p, order + p - 1);
  const ResidueSeries derived = series_derive(eta, p - 1);
  const ResidueSeries powered = series_pow(eta.truncated(order), p);
  return -(derived + powered);
}

ResidueSeries pcurv_iterate(const EtaTilde& et, std::uint64_t p, std::size_t order) {
  require_good_prime(et, p, order);
  // p derivations: start from 1 known modulo x^{N+p}.
  const ResidueSeries eta = reduce_eta(et, p, order + p);
  const auto one = ResidueSeries::constant(ResidueElem::one(eta[0].ring()), order + p);
  return delta_power(eta, one, p);
}

PCurvatureVerdict pcurv_is_zero(const EtaTilde& et, std::uint64_t p, std::size_t order) {
  const ResidueSeries r = p == 2 ? pcurv_iterate(et, p, order) : jacobson_residue(et, p, order);
  PCurvatureVerdict v;
  v.p = p;
  v.order = r.precision();
  v.witness_exponent = r.first_nonzero();
  v.zero = !v.witness_exponent.has_value();
  return v;
}

std::int64_t residue_index_bound(std::uint64_t p, std::size_t order) {
  if (order == 0) return 0;
  return static_cast<std::int64_t>((order - 1) / p + 1);
}

}  // namespace abelcong
