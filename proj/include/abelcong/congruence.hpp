#pragma once

/**
 * @file congruence.hpp
 * @brief Gauss and Cartier congruence verifiers.
 *
 * For an unramified prime p with Frobenius tau_p, a sequence satisfies
 *   Cartier at p:  a_{np} - tau_p(a_n) in p O          for all n,
 *   Gauss at p:    a_{np} - tau_p(a_n) in np O         for all n,
 * where O is the localisation of the ring of integers at the primes above p
 * (tested here for all of them at once, coordinate-wise).
 *
 * Verdicts are semi-decisions: "holds_to_bound" is evidence for the index
 * range checked, while a violation at an unramified, non-skipped prime is a
 * certificate that the congruence fails.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abelcong/rational.hpp"
#include "abelcong/sequences.hpp"

namespace abelcong {

enum class CongruenceMode { gauss, cartier };
enum class PrimeStatus { holds_to_bound, violation, skipped };
enum class Verdict { holds_to_bound, violation };

std::string to_string(CongruenceMode m);
std::string to_string(PrimeStatus s);
std::string to_string(Verdict v);

/// First failing pair: v(a_{np} - tau_p(a_n)) = valuation < required.
struct Witness {
  std::int64_t n = 0;
  Valuation valuation;
  Valuation required;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PrimeRecord {
  std::uint64_t p = 0;
  PrimeStatus status = PrimeStatus::holds_to_bound;
  std::uint64_t pairs_checked = 0;
  /// Largest |n| p examined (the effective index bound for this prime).
  std::int64_t index_bound = 0;
  std::optional<Witness> witness;
  std::string reason;  ///< set when skipped
};

struct ScanConfig {
  CongruenceMode mode = CongruenceMode::cartier;
  std::uint64_t p_min = 3;
  std::uint64_t p_max = 50;
  /// Check every n with |n| p <= max_index.
  std::int64_t max_index = 500;
  std::set<std::uint64_t> skip;
  unsigned threads = 1;

  /// Throws InvalidArgument unless p_min >= 2 and max_index >= p_max.
  void validate() const;
};

struct CongruenceReport {
  CongruenceMode mode = CongruenceMode::cartier;
  std::int64_t max_index = 0;
  std::vector<PrimeRecord> primes;

  Verdict verdict() const;
  const PrimeRecord* first_violation() const;
};

/// Cartier congruences at p for |n| p <= max_index. Throws RamifiedPrime
/// when p divides the conductor; non-integral terms give a skipped record.
PrimeRecord cartier_check(const SequenceSource& seq, std::uint64_t p, std::int64_t max_index);

/// Gauss congruences at p; n = 0 demands a_0 = tau_p(a_0) exactly.
PrimeRecord gauss_check(const SequenceSource& seq, std::uint64_t p, std::int64_t max_index);

PrimeRecord check_prime(const SequenceSource& seq, CongruenceMode mode, std::uint64_t p, std::int64_t max_index);

/// Runs the per-prime check over every prime in [p_min, p_max]; errors are
/// recorded per prime and never abort the scan. Records are in prime order.
CongruenceReport scan(const SequenceSource& seq, const ScanConfig& cfg);

/// Recomputes v(a_{np} - tau_p(a_n)) and checks it reproduces the witness.
bool reverify_witness(const SequenceSource& seq, CongruenceMode mode, std::uint64_t p, const Witness& w);

/// Necessary conditions of the Cartier property read off the low-order terms.
struct PrefixDiagnostic {
  std::optional<std::int64_t> nonzero_negative_index;  ///< most negative index with a_n != 0
  bool irrational_constant = false;                    ///< a_0 not in Q
  bool clean() const { return !nonzero_negative_index && !irrational_constant; }
  std::vector<std::string> flags() const;
};

PrefixDiagnostic prefix_diagnostic(const SequenceSource& seq);

enum class ExpansionPoint { finite, infinity };

/// n -> d p_n (finite point) or n -> -d p_n (point at infinity).
SequenceSource puiseux_rescale(const SequenceSource& coeffs, std::int64_t d, ExpansionPoint at);

}  // namespace abelcong
