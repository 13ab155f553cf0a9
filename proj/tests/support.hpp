#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "abelcong/cyclotomic.hpp"
#include "abelcong/rational.hpp"
#include "abelcong/series.hpp"

namespace abelcong::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, std::int64_t num = 50, std::int64_t den = 12) {
  return Rational(Integer(static_cast<long>(uniform(rng, -num, num))),
                  Integer(static_cast<long>(uniform(rng, 1, den))));
}

inline Rational random_nonzero_rational(Rng& rng, std::int64_t num = 50, std::int64_t den = 12) {
  for (;;)
    if (auto q = random_rational(rng, num, den); !q.is_zero()) return q;
}

inline CycloElem random_cyclo(Rng& rng, const FieldRef& f, std::int64_t num = 9, std::int64_t den = 1) {
  std::vector<Rational> c;
  for (std::uint32_t i = 0; i < f->degree(); ++i) c.push_back(random_rational(rng, num, den));
  return CycloElem(f, std::move(c));
}

inline CycloElem random_nonzero_cyclo(Rng& rng, const FieldRef& f, std::int64_t num = 9, std::int64_t den = 1) {
  for (;;)
    if (auto a = random_cyclo(rng, f, num, den); !a.is_zero()) return a;
}

inline TruncSeries<Rational> random_series(Rng& rng, std::size_t prec, Rational c0) {
  std::vector<Rational> c{c0};
  for (std::size_t i = 1; i < prec; ++i) c.push_back(random_rational(rng, 9, 6));
  return TruncSeries<Rational>(std::move(c));
}

inline TruncSeries<Rational> rseries(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return TruncSeries<Rational>(std::move(c));
}

}  // namespace abelcong::testing
