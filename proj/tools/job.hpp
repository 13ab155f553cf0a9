#pragma once

// Batch front end: one job = one sequence + one action.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abelcong/json_io.hpp"
#include "abelcong/sequences.hpp"

namespace abelcong::cli {

enum class Action { check_gauss, check_cartier, pcurvature, classify_hypergeom, dynzeta, dwork };
enum class OutputFormat { json, table, both };

std::string to_string(Action a);
Action action_from_string(const std::string& s);

struct Job {
  SequenceSpec sequence;
  Action action = Action::check_cartier;
  std::uint64_t p_min = 3;
  std::uint64_t p_max = 50;
  /// Index bound N; defaults to 10 p_max.
  std::optional<std::int64_t> terms;
  std::set<std::uint64_t> skip;
  /// nullopt means "auto" (suggest_lambda).
  std::optional<Integer> lambda = Integer(1);
  OutputFormat format = OutputFormat::both;
  std::optional<std::string> json_path;
  unsigned threads = 1;

  std::int64_t index_bound() const { return terms ? *terms : static_cast<std::int64_t>(10 * p_max); }
};

/// Strict parse of a job object; errors carry the key path.
Job parse_job_json(const Json& j);
Job parse_job_file(const std::string& path);

/// Flags mirror the job schema; --job FILE loads a base job that the other
/// flags override. Returns nullopt when --help was printed.
std::optional<Job> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes the job. Exit status: 0 no violation, 1 violation or non-zero
/// p-curvature, 2 input or precondition error.
int run(const Job& job, std::ostream& out, std::ostream& err);

/// parse_args + run with every error mapped to exit status 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abelcong::cli
