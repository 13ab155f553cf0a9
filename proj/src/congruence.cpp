#include "abelcong/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "abelcong/error.hpp"

namespace abelcong {

std::string to_string(CongruenceMode m) { return m == CongruenceMode::gauss ? "gauss" : "cartier"; }

std::string to_string(PrimeStatus s) {
  switch (s) {
    case PrimeStatus::holds_to_bound: return "holds_to_bound";
    case PrimeStatus::violation: return "violation";
    case PrimeStatus::skipped: return "skipped";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::violation ? "violation" : "holds_to_bound"; }

void ScanConfig::validate() const {
  if (p_min < 2) throw InvalidArgument("scan: p_min must be at least 2");
  if (max_index < static_cast<std::int64_t>(p_max) && p_min <= p_max)
    throw InvalidArgument("scan: max index " + std::to_string(max_index) + " is below p_max " +
                          std::to_string(p_max) + "; no pair would be checkable");
}

Verdict CongruenceReport::verdict() const {
  return first_violation() ? Verdict::violation : Verdict::holds_to_bound;
}

const PrimeRecord* CongruenceReport::first_violation() const {
  for (const auto& r : primes)
    if (r.status == PrimeStatus::violation) return &r;
  return nullptr;
}

namespace {

// Required valuation of a_{np} - tau_p(a_n).
Valuation required_valuation(CongruenceMode mode, std::int64_t n, std::uint64_t p) {
  if (mode == CongruenceMode::cartier) return Valuation(1);
  if (n == 0) return Valuation::infinity();
  return Valuation(1) + padic_val(Integer(static_cast<long>(n)), p);
}

bool integral_at(const CycloElem& a, std::uint64_t p) { return val_min(a, p) >= Valuation(0); }

}  // namespace

PrimeRecord check_prime(const SequenceSource& seq, CongruenceMode mode, std::uint64_t p, std::int64_t max_index) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (seq.field()->is_ramified(p))
    throw RamifiedPrime("p = " + std::to_string(p) + " divides the conductor " +
                        std::to_string(seq.field()->conductor()));
  PrimeRecord rec;
  rec.p = p;
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t upper = max_index;
  if (seq.max_index()) upper = std::min(upper, *seq.max_index());
  rec.index_bound = 0;

  auto check_pair = [&](std::int64_t n) -> bool {
    const CycloElem a_n = seq.term(n);
    const CycloElem a_np = seq.term(n * sp);
    for (const auto& [idx, t] : {std::pair{n, &a_n}, std::pair{n * sp, &a_np}}) {
      if (!integral_at(*t, p)) {
        rec.status = PrimeStatus::skipped;
        rec.reason = "non-integral term a_" + std::to_string(idx) + " at p = " + std::to_string(p);
        return false;
      }
    }
    const Valuation v = val_min(a_np - frobenius(a_n, p), p);
    const Valuation need = required_valuation(mode, n, p);
    ++rec.pairs_checked;
    rec.index_bound = std::max(rec.index_bound, (n < 0 ? -n : n) * sp);
    if (v < need) {
      rec.status = PrimeStatus::violation;
      rec.witness = Witness{n, v, need};
      return false;
    }
    return true;
  };

  if (!check_pair(0)) return rec;
  for (std::int64_t m = 1; m * sp <= max_index; ++m) {
    const bool pos = m * sp <= upper;
    const bool neg = -m >= seq.min_index();
    if (!pos && !neg) break;
    if (pos && !check_pair(m)) return rec;
    if (neg && !check_pair(-m)) return rec;
  }
  return rec;
}

PrimeRecord cartier_check(const SequenceSource& seq, std::uint64_t p, std::int64_t max_index) {
  return check_prime(seq, CongruenceMode::cartier, p, max_index);
}

PrimeRecord gauss_check(const SequenceSource& seq, std::uint64_t p, std::int64_t max_index) {
  return check_prime(seq, CongruenceMode::gauss, p, max_index);
}

CongruenceReport scan(const SequenceSource& seq, const ScanConfig& cfg) {
  cfg.validate();
  CongruenceReport report;
  report.mode = cfg.mode;
  report.max_index = cfg.max_index;
  const auto primes = primes_in(cfg.p_min, cfg.p_max);
  report.primes.resize(primes.size());

  auto run_one = [&](std::size_t i) {
    const auto p = primes[i];
    PrimeRecord& rec = report.primes[i];
    rec.p = p;
    if (seq.field()->is_ramified(p)) {
      rec.status = PrimeStatus::skipped;
      rec.reason = "ramified";
      return;
    }
    if (cfg.skip.count(p)) {
      rec.status = PrimeStatus::skipped;
      rec.reason = "skip-list";
      return;
    }
    try {
      rec = check_prime(seq, cfg.mode, p, cfg.max_index);
    } catch (const Error& e) {
      rec = PrimeRecord{};
      rec.p = p;
      rec.status = PrimeStatus::skipped;
      rec.reason = e.what();
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(primes.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) run_one(i);
      });
    for (auto& t : pool) t.join();
  }
  return report;
}

bool reverify_witness(const SequenceSource& seq, CongruenceMode mode, std::uint64_t p, const Witness& w) {
  const auto sp = static_cast<std::int64_t>(p);
  const Valuation v = val_min(seq.term(w.n * sp) - frobenius(seq.term(w.n), p), p);
  return v == w.valuation && w.required == required_valuation(mode, w.n, p) && v < w.required;
}

std::vector<std::string> PrefixDiagnostic::flags() const {
  std::vector<std::string> out;
  if (nonzero_negative_index)
    out.push_back("nonzero term at negative index " + std::to_string(*nonzero_negative_index));
  if (irrational_constant) out.emplace_back("irrational constant term");
  return out;
}

PrefixDiagnostic prefix_diagnostic(const SequenceSource& seq) {
  PrefixDiagnostic diag;
  for (std::int64_t n = seq.min_index(); n < 0; ++n)
    if (!seq.term(n).is_zero()) {
      diag.nonzero_negative_index = n;
      break;
    }
  diag.irrational_constant = !seq.term(0).is_rational();
  return diag;
}

SequenceSource puiseux_rescale(const SequenceSource& coeffs, std::int64_t d, ExpansionPoint at) {
  if (d <= 0) throw InvalidArgument("puiseux_rescale: ramification index must be positive");
  const Rational factor(static_cast<long>(at == ExpansionPoint::finite ? d : -d));
  auto fn = [coeffs, factor](std::int64_t n) { return coeffs.term(n) * factor; };
  return SequenceSource::from_function(coeffs.field(), fn, coeffs.min_index(), coeffs.max_index(),
                                       "puiseux(" + coeffs.label() + ")");
}

}  // namespace abelcong
