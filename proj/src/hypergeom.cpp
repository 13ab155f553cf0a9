#include "abelcong/hypergeom.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "abelcong/error.hpp"

namespace abelcong {

std::vector<ConjugateFamily> conjugate_family(const ParamTuple& alpha, const ParamTuple& beta) {
  const auto d = static_cast<std::int64_t>(parameter_lcm(alpha, beta));
  std::vector<ConjugateFamily> out;
  for (std::int64_t k = 1; k <= d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    out.push_back({k, bracket(alpha, k), bracket(beta, k)});
  }
  return out;
}

namespace {

void require_disjoint(const ParamTuple& alpha, const ParamTuple& beta) {
  for (const auto& a : alpha)
    if (beta.contains(a))
      throw InvalidArgument("parameter " + a.str() + " occurs in both alpha and beta");
}

bool interlaces(const ParamTuple& alpha, const ParamTuple& beta) {
  std::vector<std::pair<Rational, int>> pts;
  for (const auto& a : alpha) pts.emplace_back(a, 0);
  for (const auto& b : beta) pts.emplace_back(b, 1);
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].first == pts[i - 1].first) return false;
    if (pts[i].second == pts[i - 1].second) return false;
  }
  return true;
}

}  // namespace

bool is_algebraic_interlacing(const ParamTuple& alpha, const ParamTuple& beta) {
  if (alpha.size() != beta.size())
    throw InvalidArgument("interlacing needs |alpha| = |beta|, got " + std::to_string(alpha.size()) + " and " +
                          std::to_string(beta.size()));
  require_disjoint(alpha, beta);
  for (const auto& fam : conjugate_family(alpha, beta))
    if (!interlaces(fam.alpha, fam.beta)) return false;
  return true;
}

RootMultiset::RootMultiset(const ParamTuple& alpha, const ParamTuple& beta) {
  for (const auto& a : alpha) add(a, 1);
  for (const auto& b : beta) add(b, -1);
}

void RootMultiset::add(const Rational& root, std::int64_t mult) {
  const Rational r = bracket(root);
  auto [it, inserted] = entries_.try_emplace(r, 0);
  it->second += mult;
  if (it->second == 0) entries_.erase(it);
}

bool RootMultiset::is_galois_stable() const {
  std::set<std::uint64_t> denominators;
  for (const auto& [r, _] : entries_) denominators.insert(r.denominator().get_ui());
  for (std::uint64_t m : denominators) {
    std::int64_t first = 0;
    bool have_first = false;
    for (std::uint64_t j = 1; j <= m; ++j) {
      if (std::gcd(j, m) != 1) continue;
      const Rational r(Integer(static_cast<unsigned long>(j)), Integer(static_cast<unsigned long>(m)));
      const auto it = entries_.find(r);
      const std::int64_t mult = it == entries_.end() ? 0 : it->second;
      if (!have_first) {
        first = mult;
        have_first = true;
      } else if (mult != first) {
        return false;
      }
    }
  }
  return true;
}

bool is_factorial(const ParamTuple& alpha, const ParamTuple& beta) {
  return RootMultiset(alpha, beta).is_galois_stable();
}

Classification classify(const ParamTuple& alpha, const ParamTuple& beta) {
  if (!beta.contains(Rational(1))) throw InvalidArgument("beta must contain 1");
  Classification c;
  c.d = parameter_lcm(alpha, beta);
  c.family = conjugate_family(alpha, beta);
  c.factorial = is_factorial(alpha, beta);
  c.balanced = alpha.size() == beta.size();
  c.algebraic_interlacing = c.balanced && is_algebraic_interlacing(alpha, beta);
  return c;
}

}  // namespace abelcong
