#include "abelcong/sequences.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "abelcong/error.hpp"

namespace abelcong {

// ---------------------------------------------------------------------------
// Parameters and Pochhammer quotients

ParamTuple::ParamTuple(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (const auto& q : entries_)
    if (q.sign() <= 0 || q > Rational(1))
      throw InvalidArgument("hypergeometric parameter " + q.str() + " is not in (0, 1]");
  std::sort(entries_.begin(), entries_.end());
}

bool ParamTuple::contains(const Rational& q) const {
  return std::binary_search(entries_.begin(), entries_.end(), q);
}

std::uint64_t ParamTuple::denominator_lcm() const {
  std::uint64_t l = 1;
  for (const auto& q : entries_) l = lcm_u64(l, q.denominator().get_ui());
  return l;
}

std::string ParamTuple::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? ", " : "") << entries_[i];
  os << ")";
  return os.str();
}

Rational pochhammer_ratio(const ParamTuple& alpha, const ParamTuple& beta, std::uint64_t n) {
  Rational q(1);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Rational shift(static_cast<long>(i));
    for (const auto& a : alpha) q *= a + shift;
    for (const auto& b : beta) q /= b + shift;
  }
  return q;
}

Rational bracket(const Rational& x) {
  const Rational frac = x - Rational(x.floor());
  return frac.is_zero() ? Rational(1) : frac;
}

ParamTuple bracket(const ParamTuple& t, std::int64_t k) {
  std::vector<Rational> out;
  out.reserve(t.size());
  for (const auto& q : t) out.push_back(bracket(q * Rational(static_cast<long>(k))));
  return ParamTuple(std::move(out));
}

std::uint64_t parameter_lcm(const ParamTuple& alpha, const ParamTuple& beta) {
  return lcm_u64(alpha.denominator_lcm(), beta.denominator_lcm());
}

CycloElem mixed_coeff(const ParamTuple& alpha, const ParamTuple& beta, std::uint64_t d, const CycloElem& xi,
                      std::uint64_t n) {
  if (d != parameter_lcm(alpha, beta))
    throw InvalidArgument("mixed_coeff: d = " + std::to_string(d) + " but the parameter denominators have lcm " +
                          std::to_string(parameter_lcm(alpha, beta)));
  if (!(pow(xi, d) == CycloElem::one(xi.field())))
    throw InvalidArgument("mixed_coeff: xi is not a d-th root of unity");
  CycloElem sum = CycloElem::zero(xi.field());
  for (std::uint64_t k = 1; k <= d; ++k) {
    if (gcd_u64(k, d) != 1) continue;
    const auto kk = static_cast<std::int64_t>(k);
    sum += pow(xi, k) * pochhammer_ratio(bracket(alpha, kk), bracket(beta, kk), n);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Laurent polynomials

LaurentPoly::LaurentPoly(FieldRef field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
  if (!field_) throw InvalidArgument("LaurentPoly without a field");
}

LaurentPoly LaurentPoly::constant(const CycloElem& c, std::size_t nvars) {
  LaurentPoly p(c.field(), nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const CycloElem& c, Exponent e) {
  LaurentPoly p(c.field(), e.size());
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponent& e, const CycloElem& c) {
  if (e.size() != nvars_)
    throw InvalidArgument("exponent vector of length " + std::to_string(e.size()) + " in a polynomial in " +
                          std::to_string(nvars_) + " variables");
  if (c.field()->conductor() != field_->conductor()) throw RingMismatch("Laurent coefficient from another field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CycloElem LaurentPoly::constant_term() const {
  auto it = terms_.find(Exponent(nvars_, 0));
  return it == terms_.end() ? CycloElem::zero(field_) : it->second;
}

void LaurentPoly::require_compatible(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidArgument("Laurent polynomials in different numbers of variables");
  if (field_->conductor() != o.field_->conductor()) throw RingMismatch("Laurent polynomials over different fields");
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_compatible(b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_compatible(b);
  LaurentPoly out(a.field_, a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.nvars_ == b.nvars_ && a.field_->conductor() == b.field_->conductor() && a.terms_ == b.terms_;
}

CycloElem laurent_ct(const LaurentPoly& lambda, std::uint64_t n) {
  LaurentPoly power = LaurentPoly::constant(CycloElem::one(lambda.field()), lambda.nvars());
  for (std::uint64_t i = 0; i < n; ++i) power = power * lambda;
  return power.constant_term();
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw InvalidArgument("empty matrix");
  if (entries_.size() != rows_ * cols_) throw InvalidArgument("matrix entry count does not match its shape");
  for (const auto& e : entries_)
    if (e.nvars() != entries_.front().nvars() ||
        e.field()->conductor() != entries_.front().field()->conductor())
      throw InvalidArgument("matrix entries must share field and variable count");
}

LaurentMatrix LaurentMatrix::identity(const FieldRef& field, std::size_t nvars, std::size_t size) {
  std::vector<LaurentPoly> entries;
  entries.reserve(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      entries.push_back(i == j ? LaurentPoly::constant(CycloElem::one(field), nvars) : LaurentPoly(field, nvars));
  return LaurentMatrix(size, size, std::move(entries));
}

LaurentPoly LaurentMatrix::trace() const {
  if (!is_square()) throw InvalidArgument("trace of a non-square matrix");
  LaurentPoly t(field(), nvars());
  for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
  return t;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shapes do not compose");
  std::vector<LaurentPoly> entries;
  entries.reserve(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      LaurentPoly acc(a.field(), a.nvars());
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        const auto& y = b(k, j);
        if (!x.is_zero() && !y.is_zero()) acc = acc + x * y;
      }
      entries.push_back(std::move(acc));
    }
  return LaurentMatrix(a.rows_, b.cols_, std::move(entries));
}

CycloElem matrix_trace_ct(const LaurentMatrix& a, std::uint64_t n) {
  if (!a.is_square()) throw InvalidArgument("matrix_trace_ct: matrix is not square");
  LaurentMatrix power = LaurentMatrix::identity(a.field(), a.nvars(), a.rows());
  for (std::uint64_t i = 0; i < n; ++i) power = power * a;
  return power.trace().constant_term();
}

Integer fix_from_orbits(const std::vector<Integer>& orbits, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("fix_from_orbits: n must be positive");
  if (n > orbits.size())
    throw OutOfRange("fix_from_orbits: n = " + std::to_string(n) + " beyond the " + std::to_string(orbits.size()) +
                     " supplied orbit counts");
  Integer total = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) total += Integer(static_cast<unsigned long>(d)) * orbits[d - 1];
  return total;
}

// ---------------------------------------------------------------------------
// Specs

std::string kind_name(const SequenceSpec& s) {
  struct V {
    std::string operator()(const spec::Hypergeometric&) const { return "hypergeometric"; }
    std::string operator()(const spec::MixedHypergeometric&) const { return "mixed-hypergeometric"; }
    std::string operator()(const spec::LaurentCT&) const { return "laurent-ct"; }
    std::string operator()(const spec::MatrixTraceCT&) const { return "matrix-trace-ct"; }
    std::string operator()(const spec::Orbits&) const { return "orbits"; }
    std::string operator()(const spec::FixCounts&) const { return "fix"; }
    std::string operator()(const spec::Explicit&) const { return "explicit"; }
  };
  return std::visit(V{}, s);
}

void validate(const SequenceSpec& s) {
  struct V {
    void operator()(const spec::Hypergeometric&) const {}
    void operator()(const spec::MixedHypergeometric& m) const {
      if (m.d == 0) throw InvalidArgument("mixed-hypergeometric: d must be positive");
      const auto l = parameter_lcm(m.alpha, m.beta);
      if (l != m.d)
        throw InvalidArgument("mixed-hypergeometric: d = " + std::to_string(m.d) +
                              " differs from the lcm of the parameter denominators (" + std::to_string(l) + ")");
    }
    void operator()(const spec::LaurentCT&) const {}
    void operator()(const spec::MatrixTraceCT& m) const {
      if (!m.matrix.is_square()) throw InvalidArgument("matrix-trace-ct: matrix is not square");
    }
    void operator()(const spec::Orbits& o) const {
      for (const auto& c : o.counts)
        if (c < 0) throw InvalidArgument("orbits: counts must be non-negative");
    }
    void operator()(const spec::FixCounts& f) const {
      for (const auto& c : f.counts)
        if (c < 0) throw InvalidArgument("fix: counts must be non-negative");
    }
    void operator()(const spec::Explicit& e) const {
      if (!e.field) throw InvalidArgument("explicit: missing field");
      for (const auto& t : e.terms)
        if (t.field()->conductor() != e.field->conductor())
          throw InvalidArgument("explicit: terms from different fields");
    }
  };
  std::visit(V{}, s);
}

// ---------------------------------------------------------------------------
// SequenceSource

namespace {

class Generator {
 public:
  virtual ~Generator() = default;
  // Called with the source lock held, for 0 <= n (<= max_index when bounded).
  virtual CycloElem at(std::int64_t n) = 0;
};

class HypergeometricGen final : public Generator {
 public:
  explicit HypergeometricGen(const spec::Hypergeometric& h) : h_(h), field_(CycloField::get(1)) {
    ratio_.emplace_back(1);
    scale_pow_.emplace_back(1);
  }
  CycloElem at(std::int64_t n) override {
    const auto un = static_cast<std::size_t>(n);
    while (ratio_.size() <= un) {
      const Rational i(static_cast<long>(ratio_.size() - 1));
      Rational r = ratio_.back();
      for (const auto& a : h_.alpha) r *= a + i;
      for (const auto& b : h_.beta) r /= b + i;
      ratio_.push_back(r);
      scale_pow_.push_back(scale_pow_.back() * h_.scale);
    }
    return embed_rational(scale_pow_[un] * ratio_[un], field_);
  }

 private:
  spec::Hypergeometric h_;
  FieldRef field_;
  std::vector<Rational> ratio_, scale_pow_;
};

class MixedGen final : public Generator {
 public:
  explicit MixedGen(const spec::MixedHypergeometric& m) : field_(CycloField::get(m.d)) {
    const CycloElem xi = zeta_pow(field_, m.xi_power);
    for (std::uint32_t k = 1; k <= m.d; ++k) {
      if (gcd_u64(k, m.d) != 1) continue;
      const auto kk = static_cast<std::int64_t>(k);
      families_.push_back({bracket(m.alpha, kk), bracket(m.beta, kk), pow(xi, k), {Rational(1)}});
    }
  }
  CycloElem at(std::int64_t n) override {
    const auto un = static_cast<std::size_t>(n);
    CycloElem sum = CycloElem::zero(field_);
    for (auto& f : families_) {
      while (f.ratio.size() <= un) {
        const Rational i(static_cast<long>(f.ratio.size() - 1));
        Rational r = f.ratio.back();
        for (const auto& a : f.alpha) r *= a + i;
        for (const auto& b : f.beta) r /= b + i;
        f.ratio.push_back(r);
      }
      sum += f.xi_k * f.ratio[un];
    }
    return sum;
  }

 private:
  struct Family {
    ParamTuple alpha, beta;
    CycloElem xi_k;
    std::vector<Rational> ratio;
  };
  FieldRef field_;
  std::vector<Family> families_;
};

class LaurentGen final : public Generator {
 public:
  explicit LaurentGen(LaurentPoly lambda)
      : lambda_(std::move(lambda)), power_(LaurentPoly::constant(CycloElem::one(lambda_.field()), lambda_.nvars())) {
    cts_.push_back(power_.constant_term());
  }
  CycloElem at(std::int64_t n) override {
    while (cts_.size() <= static_cast<std::size_t>(n)) {
      power_ = power_ * lambda_;
      cts_.push_back(power_.constant_term());
    }
    return cts_[static_cast<std::size_t>(n)];
  }

 private:
  LaurentPoly lambda_, power_;
  std::vector<CycloElem> cts_;
};

class MatrixGen final : public Generator {
 public:
  explicit MatrixGen(LaurentMatrix a)
      : a_(std::move(a)), power_(LaurentMatrix::identity(a_.field(), a_.nvars(), a_.rows())) {
    cts_.push_back(power_.trace().constant_term());
  }
  CycloElem at(std::int64_t n) override {
    while (cts_.size() <= static_cast<std::size_t>(n)) {
      power_ = power_ * a_;
      cts_.push_back(power_.trace().constant_term());
    }
    return cts_[static_cast<std::size_t>(n)];
  }

 private:
  LaurentMatrix a_, power_;
  std::vector<CycloElem> cts_;
};

class CountsGen final : public Generator {
 public:
  CountsGen(std::vector<Integer> counts, bool orbits) : counts_(std::move(counts)), orbits_(orbits) {}
  CycloElem at(std::int64_t n) override {
    if (n == 0) return CycloElem::zero(field_);
    const auto un = static_cast<std::uint64_t>(n);
    if (orbits_) return embed_rational(Rational(fix_from_orbits(counts_, un)), field_);
    return embed_rational(Rational(counts_.at(un - 1)), field_);
  }

 private:
  std::vector<Integer> counts_;
  bool orbits_;
  FieldRef field_ = CycloField::get(1);
};

class FunctionGen final : public Generator {
 public:
  explicit FunctionGen(std::function<CycloElem(std::int64_t)> fn) : fn_(std::move(fn)) {}
  CycloElem at(std::int64_t n) override {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    return memo_.emplace(n, fn_(n)).first->second;
  }

 private:
  std::function<CycloElem(std::int64_t)> fn_;
  std::unordered_map<std::int64_t, CycloElem> memo_;
};

}  // namespace

struct SequenceSource::Impl {
  std::optional<SequenceSpec> spec;
  FieldRef field;
  std::int64_t min_index = 0;
  std::optional<std::int64_t> max_index;
  std::string label;
  // Explicit sources are answered without a generator.
  std::optional<spec::Explicit> explicit_terms;
  std::unique_ptr<Generator> gen;
  std::mutex mu;
};

SequenceSource::SequenceSource(SequenceSpec s) : impl_(std::make_shared<Impl>()) {
  validate(s);
  auto& im = *impl_;
  im.label = kind_name(s);
  struct Builder {
    Impl& im;
    void operator()(const spec::Hypergeometric& h) {
      im.field = CycloField::get(1);
      im.gen = std::make_unique<HypergeometricGen>(h);
    }
    void operator()(const spec::MixedHypergeometric& m) {
      im.field = CycloField::get(m.d);
      im.gen = std::make_unique<MixedGen>(m);
    }
    void operator()(const spec::LaurentCT& l) {
      im.field = l.lambda.field();
      im.gen = std::make_unique<LaurentGen>(l.lambda);
    }
    void operator()(const spec::MatrixTraceCT& m) {
      im.field = m.matrix.field();
      im.gen = std::make_unique<MatrixGen>(m.matrix);
    }
    void operator()(const spec::Orbits& o) {
      im.field = CycloField::get(1);
      im.max_index = static_cast<std::int64_t>(o.counts.size());
      im.gen = std::make_unique<CountsGen>(o.counts, true);
    }
    void operator()(const spec::FixCounts& f) {
      im.field = CycloField::get(1);
      im.max_index = static_cast<std::int64_t>(f.counts.size());
      im.gen = std::make_unique<CountsGen>(f.counts, false);
    }
    void operator()(const spec::Explicit& e) {
      im.field = e.field;
      im.min_index = std::min<std::int64_t>(e.offset, 0);
      im.explicit_terms = e;
    }
  };
  std::visit(Builder{im}, s);
  im.spec = std::move(s);
}

SequenceSource SequenceSource::from_function(FieldRef field, std::function<CycloElem(std::int64_t)> fn,
                                             std::int64_t min_index, std::optional<std::int64_t> max_index,
                                             std::string label) {
  auto im = std::make_shared<Impl>();
  im->field = std::move(field);
  im->min_index = min_index;
  im->max_index = max_index;
  im->label = std::move(label);
  im->gen = std::make_unique<FunctionGen>(std::move(fn));
  return SequenceSource(std::move(im));
}

CycloElem SequenceSource::term(std::int64_t n) const {
  auto& im = *impl_;
  if (im.explicit_terms) {
    const auto& e = *im.explicit_terms;
    const std::int64_t i = n - e.offset;
    if (i < 0 || i >= static_cast<std::int64_t>(e.terms.size())) return CycloElem::zero(im.field);
    return e.terms[static_cast<std::size_t>(i)];
  }
  if (n < im.min_index) return CycloElem::zero(im.field);
  if (im.max_index && n > *im.max_index)
    throw OutOfRange(im.label + ": term " + std::to_string(n) + " requested, data ends at index " +
                     std::to_string(*im.max_index));
  if (n < 0 && im.spec) return CycloElem::zero(im.field);
  std::lock_guard lock(im.mu);
  return im.gen->at(n);
}

const FieldRef& SequenceSource::field() const { return impl_->field; }
std::int64_t SequenceSource::min_index() const { return impl_->min_index; }
std::optional<std::int64_t> SequenceSource::max_index() const { return impl_->max_index; }
const SequenceSpec* SequenceSource::spec() const { return impl_->spec ? &*impl_->spec : nullptr; }
const std::string& SequenceSource::label() const { return impl_->label; }

}  // namespace abelcong
