#include "abelcong/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "abelcong/error.hpp"

namespace abelcong {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(RatPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Exact quotient of a by a monic divisor b.
IntPoly exact_divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    q[i - db] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw Error("cyclotomic division left a remainder");
  return q;
}

// x^k reduced modulo the monic polynomial m, for k = 0 .. count-1.
std::vector<IntPoly> power_table(const IntPoly& m, std::uint32_t count) {
  const std::size_t deg = m.size() - 1;
  std::vector<IntPoly> table;
  table.reserve(count);
  IntPoly cur(deg, 0);
  if (deg == 0) {
    table.assign(count, IntPoly{});
    return table;
  }
  cur[0] = 1;
  for (std::uint32_t k = 0; k < count; ++k) {
    table.push_back(cur);
    // cur <- x * cur mod m
    const Integer top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t j = 0; j < deg; ++j) cur[j] -= top * m[j];
  }
  return table;
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

RatPoly rat_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void rat_divmod(RatPoly a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  trim(a);
  q.clear();
  if (a.size() < b.size()) {
    r = a;
    return;
  }
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (!c.is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  r = a;
  trim(q);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, x = b % m;
  while (e > 0) {
    if (e & 1U) r = r * x % m;
    x = x * x % m;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mod(const Integer& n, std::uint64_t p) {
  return mpz_fdiv_ui(n.get_mpz_t(), p);
}

}  // namespace

// ---------------------------------------------------------------------------
// CycloField

std::uint32_t euler_phi(std::uint32_t d) {
  if (d == 0) throw InvalidArgument("euler_phi(0)");
  std::uint32_t result = d, n = d;
  for (std::uint32_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      while (n % f == 0) n /= f;
      result -= result / f;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(std::uint32_t d) {
  if (d == 0) throw InvalidArgument("cyclotomic polynomial of order 0");
  static std::mutex mu;
  static std::map<std::uint32_t, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPoly poly(d + 1, 0);
  poly[0] = -1;
  poly[d] = 1;
  for (std::uint32_t e = 1; e < d; ++e)
    if (d % e == 0) poly = exact_divide_monic(poly, cyclotomic_polynomial(e));
  std::lock_guard lock(mu);
  cache.emplace(d, poly);
  return poly;
}

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t d) {
  if (d == 0) throw InvalidArgument("multiplicative_order modulo 0");
  if (d == 1) return 1;
  if (gcd_u64(p % d, d) != 1) throw InvalidArgument("multiplicative_order: p not invertible mod d");
  std::uint64_t k = 1, x = p % d;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * p % d);
    ++k;
  }
  return k;
}

CycloField::CycloField(std::uint32_t d, std::vector<Integer> minpoly)
    : d_(d), phi_(static_cast<std::uint32_t>(minpoly.size() - 1)), minpoly_(std::move(minpoly)) {
  powers_ = power_table(minpoly_, d_);
}

FieldRef CycloField::get(std::uint32_t d) {
  if (d == 0) throw InvalidArgument("cyclotomic conductor must be positive");
  static std::mutex mu;
  static std::map<std::uint32_t, FieldRef> fields;
  {
    std::lock_guard lock(mu);
    if (auto it = fields.find(d); it != fields.end()) return it->second;
  }
  auto field = std::make_shared<const CycloField>(d, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  return fields.emplace(d, std::move(field)).first->second;
}

bool CycloField::is_ramified(std::uint64_t p) const { return p != 0 && d_ % p == 0; }

// ---------------------------------------------------------------------------
// CycloElem

CycloElem::CycloElem() : field_(CycloField::get(1)), coords_(1) {}

CycloElem::CycloElem(FieldRef field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw InvalidArgument("CycloElem without a field");
  if (coords_.size() != field_->degree())
    throw InvalidArgument("CycloElem: expected " + std::to_string(field_->degree()) + " coordinates, got " +
                          std::to_string(coords_.size()));
}

CycloElem CycloElem::zero(const FieldRef& field) { return CycloElem(field, std::vector<Rational>(field->degree())); }

CycloElem CycloElem::one(const FieldRef& field) {
  auto e = zero(field);
  e.coords_[0] = Rational(1);
  return e;
}

bool CycloElem::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

Rational CycloElem::as_rational() const {
  if (!is_rational()) throw InvalidArgument("element " + str() + " is not rational");
  return coords_[0];
}

Integer CycloElem::denominator() const {
  Integer l = 1;
  for (const auto& c : coords_) l = lcm(l, c.denominator());
  return l;
}

void CycloElem::require_same_field(const CycloElem& o) const {
  if (field_->conductor() != o.field_->conductor())
    throw RingMismatch("elements of Q(zeta_" + std::to_string(field_->conductor()) + ") and Q(zeta_" +
                       std::to_string(o.field_->conductor()) + ")");
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  require_same_field(o);
  const std::uint32_t d = field_->conductor();
  const std::size_t n = coords_.size();
  if (n == 1) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  // Convolve, fold exponents modulo d (z^d = 1), then expand through the power table.
  std::vector<Rational> folded(d);
  for (std::size_t i = 0; i < n; ++i) {
    if (coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coords_[j].is_zero()) continue;
      folded[(i + j) % d] += coords_[i] * o.coords_[j];
    }
  }
  std::vector<Rational> out(n);
  for (std::uint32_t k = 0; k < d; ++k) {
    if (folded[k].is_zero()) continue;
    const auto& pk = field_->power(k);
    for (std::size_t i = 0; i < n; ++i)
      if (pk[i] != 0) out[i] += folded[k] * Rational(pk[i]);
  }
  coords_ = std::move(out);
  return *this;
}

CycloElem operator-(const CycloElem& a) {
  CycloElem r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * inv(b); }

bool operator==(const CycloElem& a, const CycloElem& b) {
  return a.field_->conductor() == b.field_->conductor() && a.coords_ == b.coords_;
}

std::string CycloElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0)
      os << mag;
    else {
      if (mag != Rational(1)) os << mag << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycloElem embed_rational(const Rational& q, const FieldRef& field) {
  auto e = CycloElem::zero(field);
  return e + CycloElem::one(field) * q;
}

CycloElem zeta_pow(const FieldRef& field, std::int64_t k) {
  const auto d = static_cast<std::int64_t>(field->conductor());
  const auto r = static_cast<std::uint32_t>(((k % d) + d) % d);
  std::vector<Rational> coords;
  coords.reserve(field->degree());
  for (const auto& c : field->power(r)) coords.emplace_back(c);
  return CycloElem(field, std::move(coords));
}

CycloElem inv(const CycloElem& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(a.field()->conductor()) + ")");
  const auto& field = a.field();
  if (field->degree() == 1) return CycloElem(field, {Rational(1) / a.coords()[0]});
  // Extended Euclid on (Phi_d, a): track s with s * a = r (mod Phi_d).
  RatPoly r0, r1(a.coords()), s0, s1{Rational(1)};
  for (const auto& c : field->minpoly()) r0.emplace_back(c);
  trim(r1);
  while (!r1.empty()) {
    RatPoly q, r;
    rat_divmod(r0, r1, q, r);
    RatPoly s = rat_sub(s0, rat_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a non-zero constant since Phi_d is irreducible.
  if (r0.size() != 1) throw Error("inverse: gcd with Phi_d is not constant");
  const Rational scale = Rational(1) / r0[0];
  RatPoly u;
  RatPoly ignored;
  RatPoly m;
  for (const auto& c : field->minpoly()) m.emplace_back(c);
  rat_divmod(s0, m, ignored, u);
  u.resize(field->degree());
  for (auto& c : u) c *= scale;
  return CycloElem(field, std::move(u));
}

CycloElem pow(const CycloElem& a, std::uint64_t e) {
  CycloElem result = CycloElem::one(a.field()), base = a;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

CycloElem galois_act(const CycloElem& a, std::int64_t k) {
  const auto& field = a.field();
  const auto d = static_cast<std::int64_t>(field->conductor());
  const std::int64_t kk = ((k % d) + d) % d;
  if (std::gcd(kk, d) != 1) throw InvalidArgument("galois_act: k not coprime to the conductor");
  if (field->degree() == 1) return a;
  std::vector<Rational> folded(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    if (!a.coords()[i].is_zero()) folded[(static_cast<std::int64_t>(i) * kk) % d] += a.coords()[i];
  std::vector<Rational> out(field->degree());
  for (std::int64_t j = 0; j < d; ++j) {
    if (folded[j].is_zero()) continue;
    const auto& pj = field->power(static_cast<std::uint32_t>(j));
    for (std::size_t i = 0; i < out.size(); ++i)
      if (pj[i] != 0) out[i] += folded[j] * Rational(pj[i]);
  }
  return CycloElem(field, std::move(out));
}

CycloElem frobenius(const CycloElem& a, std::uint64_t p) {
  const auto d = a.field()->conductor();
  if (a.field()->is_ramified(p))
    throw RamifiedPrime("p = " + std::to_string(p) + " divides the conductor " + std::to_string(d));
  return galois_act(a, static_cast<std::int64_t>(p % d));
}

Valuation val_min(const CycloElem& a, std::uint64_t p) {
  Valuation best = Valuation::infinity();
  for (const auto& c : a.coords()) best = std::min(best, padic_val(c, p));
  return best;
}

bool same_ring(const CycloElem& a, const CycloElem& b) {
  return a.field()->conductor() == b.field()->conductor();
}

// ---------------------------------------------------------------------------
// ResidueRing / ResidueElem

ResidueRing::ResidueRing(std::uint32_t d, std::uint64_t p) : d_(d), p_(p) {
  const auto field = CycloField::get(d);
  phi_ = field->degree();
  powers_.reserve(d);
  for (std::uint32_t k = 0; k < d; ++k) {
    std::vector<std::uint64_t> row;
    row.reserve(phi_);
    for (const auto& c : field->power(k)) row.push_back(reduce_mod(c, p));
    powers_.push_back(std::move(row));
  }
}

ResidueRingRef ResidueRing::get(std::uint32_t d, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("residue ring modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw InvalidArgument("residue ring modulus too large");
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint64_t>, ResidueRingRef> rings;
  std::lock_guard lock(mu);
  auto key = std::make_pair(d, p);
  if (auto it = rings.find(key); it != rings.end()) return it->second;
  return rings.emplace(key, std::make_shared<const ResidueRing>(d, p)).first->second;
}

ResidueElem::ResidueElem(ResidueRingRef ring, std::vector<std::uint64_t> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_->degree()) throw InvalidArgument("ResidueElem: wrong number of coefficients");
  for (auto& c : coeffs_) c %= ring_->prime();
}

ResidueElem ResidueElem::zero(const ResidueRingRef& ring) {
  return ResidueElem(ring, std::vector<std::uint64_t>(ring->degree(), 0));
}

ResidueElem ResidueElem::one(const ResidueRingRef& ring) {
  auto e = zero(ring);
  e.coeffs_[0] = 1 % ring->prime();
  return e;
}

bool ResidueElem::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

void ResidueElem::require_same_ring(const ResidueElem& o) const {
  if (ring_ != o.ring_) throw RingMismatch("residue elements of different rings");
}

ResidueElem& ResidueElem::operator+=(const ResidueElem& o) {
  require_same_ring(o);
  const auto p = ring_->prime();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) % p;
  return *this;
}

ResidueElem& ResidueElem::operator-=(const ResidueElem& o) {
  require_same_ring(o);
  const auto p = ring_->prime();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + p - o.coeffs_[i]) % p;
  return *this;
}

ResidueElem& ResidueElem::operator*=(const ResidueElem& o) {
  require_same_ring(o);
  const auto p = ring_->prime();
  const auto d = ring_->conductor();
  const std::size_t n = coeffs_.size();
  if (n == 1) {
    coeffs_[0] = coeffs_[0] * o.coeffs_[0] % p;
    return *this;
  }
  std::vector<std::uint64_t> folded(d, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      auto& slot = folded[(i + j) % d];
      slot = (slot + coeffs_[i] * o.coeffs_[j]) % p;
    }
  }
  std::vector<std::uint64_t> out(n, 0);
  for (std::uint32_t k = 0; k < d; ++k) {
    if (folded[k] == 0) continue;
    const auto& pk = ring_->power(k);
    for (std::size_t i = 0; i < n; ++i) out[i] = (out[i] + folded[k] * pk[i]) % p;
  }
  coeffs_ = std::move(out);
  return *this;
}

ResidueElem operator-(const ResidueElem& a) {
  ResidueElem r = a;
  const auto p = a.ring_->prime();
  for (auto& c : r.coeffs_) c = (p - c) % p;
  return r;
}

bool operator==(const ResidueElem& a, const ResidueElem& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

std::string ResidueElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0)
      os << coeffs_[i];
    else {
      if (coeffs_[i] != 1) os << coeffs_[i] << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

ResidueElem pow(const ResidueElem& a, std::uint64_t e) {
  ResidueElem result = ResidueElem::one(a.ring()), base = a;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

ResidueElem times_int(const ResidueElem& a, std::int64_t n) {
  const auto p = a.ring()->prime();
  const auto k = static_cast<std::uint64_t>(((n % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                            static_cast<std::int64_t>(p));
  std::vector<std::uint64_t> c = a.coeffs();
  for (auto& x : c) x = x * k % p;
  return ResidueElem(a.ring(), std::move(c));
}

ResidueElem residue_from_int(const ResidueRingRef& ring, const Integer& n) {
  auto e = ResidueElem::zero(ring);
  std::vector<std::uint64_t> c(ring->degree(), 0);
  c[0] = reduce_mod(n, ring->prime());
  return ResidueElem(ring, std::move(c));
}

ResidueElem residue_project(const CycloElem& a, const ResidueRingRef& ring) {
  const auto p = ring->prime();
  if (a.field()->conductor() != ring->conductor()) throw RingMismatch("residue_project: conductor mismatch");
  std::vector<std::uint64_t> c;
  c.reserve(a.coords().size());
  for (const auto& q : a.coords()) {
    const std::uint64_t den = reduce_mod(q.denominator(), p);
    if (den == 0)
      throw NonIntegral("element " + a.str() + " is not " + std::to_string(p) + "-integral");
    const std::uint64_t num = reduce_mod(q.numerator(), p);
    c.push_back(static_cast<std::uint64_t>(static_cast<unsigned __int128>(num) * mod_pow(den, p - 2, p) % p));
  }
  return ResidueElem(ring, std::move(c));
}

ResidueElem residue_project(const CycloElem& a, std::uint64_t p) {
  return residue_project(a, ResidueRing::get(a.field()->conductor(), p));
}

}  // namespace abelcong
