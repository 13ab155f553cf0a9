#include "job.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "abelcong/congruence.hpp"
#include "abelcong/dynzeta.hpp"
#include "abelcong/error.hpp"
#include "abelcong/hypergeom.hpp"
#include "abelcong/pcurvature.hpp"

namespace abelcong::cli {

namespace {

const std::pair<Action, const char*> kActionNames[] = {
    {Action::check_gauss, "check-gauss"}, {Action::check_cartier, "check-cartier"},
    {Action::pcurvature, "pcurvature"},   {Action::classify_hypergeom, "classify-hypergeom"},
    {Action::dynzeta, "dynzeta"},         {Action::dwork, "dwork"},
};

std::pair<std::uint64_t, std::uint64_t> parse_prime_range(const std::string& s, const std::string& path) {
  const auto dots = s.find("..");
  auto number = [&](const std::string& t) -> std::uint64_t {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9)
      throw ParseError("malformed prime range \"" + s + "\", expected MIN..MAX", path);
    return std::stoull(t);
  };
  if (dots == std::string::npos) {
    const auto p = number(s);
    return {p, p};
  }
  const auto lo = number(s.substr(0, dots)), hi = number(s.substr(dots + 2));
  if (lo > hi) throw ParseError("empty prime range \"" + s + "\"", path);
  return {lo, hi};
}

std::optional<Integer> parse_lambda(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "auto") return std::nullopt;
  const Integer l = integer_from_json(j, path);
  if (l < 1) throw ParseError("lambda must be a positive integer or \"auto\"", path);
  return l;
}

OutputFormat format_from_string(const std::string& s, const std::string& path) {
  if (s == "json") return OutputFormat::json;
  if (s == "table") return OutputFormat::table;
  if (s == "both") return OutputFormat::both;
  throw ParseError("expected \"json\", \"table\" or \"both\"", path);
}

Action mode_action(const std::string& s, const std::string& path) {
  if (s == "gauss") return Action::check_gauss;
  if (s == "cartier") return Action::check_cartier;
  throw ParseError("expected \"gauss\" or \"cartier\"", path);
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const RamifiedPrime*>(&e)) return "RamifiedPrime";
  if (dynamic_cast<const NonIntegral*>(&e)) return "NonIntegral";
  if (dynamic_cast<const NonRationalResidue*>(&e)) return "NonRationalResidue";
  if (dynamic_cast<const OutOfRange*>(&e)) return "OutOfRange";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const RingMismatch*>(&e)) return "RingMismatch";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const Json::exception*>(&e)) return "ParseError";
  return "Error";
}

int report_error(const std::exception& e, std::ostream& err) {
  Json d;
  d["error"] = error_kind(e);
  d["message"] = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e); pe && !pe->path().empty()) d["path"] = pe->path();
  err << d.dump() << '\n';
  return 2;
}

Json skipped_record(std::uint64_t p, const std::string& reason) {
  return {{"p", p}, {"status", "skipped"}, {"reason", reason}};
}

std::string valuation_text(const Valuation& v) { return v.str(); }

void congruence_table(const CongruenceReport& rep, std::ostream& os) {
  os << to_string(rep.mode) << " scan, |n|p <= " << rep.max_index << '\n';
  os << std::setw(6) << "p" << "  " << std::left << std::setw(16) << "status" << std::right << std::setw(8) << "pairs"
     << "  detail\n";
  for (const auto& r : rep.primes) {
    os << std::setw(6) << r.p << "  " << std::left << std::setw(16) << to_string(r.status) << std::right
       << std::setw(8) << r.pairs_checked << "  ";
    if (r.witness)
      os << "n=" << r.witness->n << " v=" << valuation_text(r.witness->valuation)
         << " need=" << valuation_text(r.witness->required);
    else if (!r.reason.empty())
      os << r.reason;
    else
      os << "|n|p <= " << r.index_bound;
    os << '\n';
  }
  os << "verdict: " << to_string(rep.verdict()) << '\n';
}

ScanConfig scan_config(const Job& job, CongruenceMode mode) {
  ScanConfig cfg;
  cfg.mode = mode;
  cfg.p_min = job.p_min;
  cfg.p_max = job.p_max;
  cfg.max_index = job.index_bound();
  cfg.skip = job.skip;
  cfg.threads = job.threads;
  return cfg;
}

int run_check(const Job& job, CongruenceMode mode, Json& report, std::ostream& table, std::ostream& err) {
  const SequenceSource seq(job.sequence);
  if (const auto* h = std::get_if<spec::Hypergeometric>(&job.sequence); h && h->alpha.size() != h->beta.size())
    err << "warning: |alpha| != |beta|; the coefficients are not of hypergeometric {r+1}F_r shape\n";
  const ScanConfig cfg = scan_config(job, mode);
  cfg.validate();
  const CongruenceReport rep = scan(seq, cfg);
  report = to_json(rep);
  congruence_table(rep, table);
  if (std::holds_alternative<spec::Explicit>(job.sequence)) {
    const auto diag = prefix_diagnostic(seq);
    if (!diag.clean()) {
      report["diagnostics"] = diag.flags();
      for (const auto& f : diag.flags()) table << "diagnostic: " << f << '\n';
    }
  }
  return rep.verdict() == Verdict::violation ? 1 : 0;
}

int run_pcurvature(const Job& job, Json& report, std::ostream& table) {
  const SequenceSource seq(job.sequence);
  const Integer lambda = job.lambda ? *job.lambda : suggest_lambda(seq);
  EtaTilde et = strip_and_rescale(seq, lambda);
  et.lambda_heuristic = !job.lambda;
  const auto order = static_cast<std::size_t>(job.index_bound());
  report["a0"] = et.a0.str();
  report["lambda"] = lambda.get_str();
  report["lambda_heuristic"] = et.lambda_heuristic;
  Json primes = Json::array();
  int status = 0;
  table << "p-curvature of d/dx - eta~ modulo x^" << order << ", lambda = " << lambda.get_str()
        << (et.lambda_heuristic ? " (heuristic)" : "") << '\n';
  for (std::uint64_t p : primes_in(job.p_min, job.p_max)) {
    std::string skip_reason;
    if (job.skip.count(p)) skip_reason = "skip-list";
    else if (et.field()->is_ramified(p)) skip_reason = "ramified";
    else if (mpz_divisible_ui_p(lambda.get_mpz_t(), p)) skip_reason = "divides lambda";
    if (!skip_reason.empty()) {
      primes.push_back(skipped_record(p, skip_reason));
      table << std::setw(6) << p << "  skipped (" << skip_reason << ")\n";
      continue;
    }
    try {
      const auto v = pcurv_is_zero(et, p, order);
      primes.push_back(to_json(v));
      if (v.zero) {
        table << std::setw(6) << p << "  zero to order " << v.order << '\n';
      } else {
        status = 1;
        table << std::setw(6) << p << "  nonzero, first at x^" << *v.witness_exponent << '\n';
      }
    } catch (const NonIntegral& e) {
      primes.push_back(skipped_record(p, e.what()));
      table << std::setw(6) << p << "  skipped (" << e.what() << ")\n";
    }
  }
  report["primes"] = primes;
  report["verdict"] = status ? "nonzero" : "zero_to_order";
  return status;
}

int run_classify(const Job& job, Json& report, std::ostream& table) {
  const auto* h = std::get_if<spec::Hypergeometric>(&job.sequence);
  if (!h) throw InvalidArgument("classify-hypergeom needs a hypergeometric sequence");
  const Classification c = classify(h->alpha, h->beta);
  report = to_json(c);
  table << "alpha = " << h->alpha.str() << ", beta = " << h->beta.str() << ", d = " << c.d << '\n';
  for (const auto& f : c.family) table << "  k = " << f.k << ": " << f.alpha.str() << " / " << f.beta.str() << '\n';
  table << "algebraic (interlacing): " << (c.algebraic_interlacing ? "yes" : "no") << '\n';
  table << "factorial: " << (c.factorial ? "yes" : "no") << '\n';
  return 0;
}

std::vector<Integer> fix_counts_of(const SequenceSpec& s) {
  if (const auto* f = std::get_if<spec::FixCounts>(&s)) return f->counts;
  if (const auto* o = std::get_if<spec::Orbits>(&s)) {
    std::vector<Integer> fix;
    for (std::uint64_t n = 1; n <= o->counts.size(); ++n) fix.push_back(fix_from_orbits(o->counts, n));
    return fix;
  }
  throw InvalidArgument("dynzeta needs a \"fix\" or \"orbits\" sequence");
}

int run_dynzeta(const Job& job, Json& report, std::ostream& table) {
  const std::vector<Integer> fix = fix_counts_of(job.sequence);
  const auto order = std::min<std::size_t>(fix.size(), static_cast<std::size_t>(std::max<std::int64_t>(job.index_bound(), 0)));
  const auto orbits = orbit_invert(fix);
  const auto zeta = zeta_coeffs(fix, order);
  Json otab = Json::array();
  table << std::setw(6) << "n" << std::setw(14) << "fix" << std::setw(14) << "orbits" << "  check\n";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& o = orbits[i];
    otab.push_back({{"n", o.n}, {"fix", fix[i].get_str()}, {"orbits", o.value.str()}, {"integral", o.integral},
                    {"nonnegative", o.nonnegative}});
    table << std::setw(6) << o.n << std::setw(14) << fix[i].get_str() << std::setw(14) << o.value.str() << "  "
          << (!o.integral ? "not integral" : !o.nonnegative ? "negative" : "ok") << '\n';
  }
  Json z = Json::array();
  table << "zeta:";
  for (const auto& c : zeta.coeffs()) {
    z.push_back(c.str());
    table << ' ' << c.str();
  }
  table << '\n';
  ScanConfig cfg = scan_config(job, CongruenceMode::gauss);
  cfg.max_index = std::max<std::int64_t>(cfg.max_index, static_cast<std::int64_t>(cfg.p_max));
  cfg.validate();
  const CongruenceReport rep = scan(SequenceSource(spec::FixCounts{fix}), cfg);
  congruence_table(rep, table);
  report["orbits"] = otab;
  report["dold"] = all_integral(orbits);
  report["realizable"] = all_realizable(orbits);
  report["zeta"] = z;
  report["gauss"] = to_json(rep);
  return !all_integral(orbits) || rep.verdict() == Verdict::violation ? 1 : 0;
}

int run_dwork(const Job& job, Json& report, std::ostream& table) {
  const SequenceSource seq(job.sequence);
  auto order = static_cast<std::size_t>(std::max<std::int64_t>(job.index_bound(), 1));
  if (seq.max_index()) order = std::min<std::size_t>(order, static_cast<std::size_t>(*seq.max_index()) + 1);
  const auto s = log_series_of(seq, order);
  const auto e = series_exp(s);
  Json primes = Json::array();
  int status = 0;
  table << "Dwork test of s = sum a_n x^n / n modulo x^" << order << '\n';
  for (std::uint64_t p : primes_in(job.p_min, job.p_max)) {
    std::string skip_reason;
    if (job.skip.count(p)) skip_reason = "skip-list";
    else if (seq.field()->is_ramified(p)) skip_reason = "ramified";
    if (!skip_reason.empty()) {
      primes.push_back(skipped_record(p, skip_reason));
      table << std::setw(6) << p << "  skipped (" << skip_reason << ")\n";
      continue;
    }
    const DworkVerdict v = dwork_check(s, p, order);
    bool exp_integral = true;
    for (const auto& c : e.coeffs())
      if (val_min(c, p) < Valuation(0)) {
        exp_integral = false;
        break;
      }
    Json r = to_json(v);
    r["exp_integral"] = exp_integral;
    primes.push_back(r);
    if (!v.holds) status = 1;
    table << std::setw(6) << p << "  " << (v.holds ? "holds" : "violation");
    if (v.witness_exponent) table << " at x^" << *v.witness_exponent << " (v=" << v.witness_valuation.str() << ")";
    table << ", exp(s) " << (exp_integral ? "integral" : "not integral") << '\n';
  }
  report["order"] = order;
  report["primes"] = primes;
  report["verdict"] = status ? "violation" : "holds_to_bound";
  return status;
}

}  // namespace

std::string to_string(Action a) {
  for (const auto& [act, name] : kActionNames)
    if (act == a) return name;
  return "?";
}

Action action_from_string(const std::string& s) {
  for (const auto& [act, name] : kActionNames)
    if (s == name) return act;
  throw ParseError("unknown action \"" + s + "\"", "action");
}

Job parse_job_json(const Json& j) {
  require_keys(j, "", {"sequence", "action", "mode", "primes", "terms", "skip", "lambda", "output", "threads"});
  Job job;
  job.sequence = spec_from_json(require_field(j, "", "sequence"), "sequence");
  if (!j.contains("action") && !j.contains("mode")) throw ParseError("missing key", "action");
  if (j.contains("action")) {
    if (!j["action"].is_string()) throw ParseError("expected a string", "action");
    job.action = action_from_string(j["action"].get<std::string>());
  }
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw ParseError("expected a string", "mode");
    const Action m = mode_action(j["mode"].get<std::string>(), "mode");
    if (j.contains("action") && m != job.action) throw ParseError("conflicts with \"action\"", "mode");
    job.action = m;
  }
  if (j.contains("primes")) {
    const Json& pj = j["primes"];
    if (pj.is_string()) {
      std::tie(job.p_min, job.p_max) = parse_prime_range(pj.get<std::string>(), "primes");
    } else if (pj.is_object()) {
      require_keys(pj, "primes", {"min", "max"});
      job.p_min = static_cast<std::uint64_t>(int_from_json(require_field(pj, "primes", "min"), "primes.min"));
      job.p_max = static_cast<std::uint64_t>(int_from_json(require_field(pj, "primes", "max"), "primes.max"));
      if (job.p_min > job.p_max) throw ParseError("empty prime range", "primes");
    } else {
      throw ParseError("expected \"MIN..MAX\" or {\"min\", \"max\"}", "primes");
    }
  }
  if (j.contains("terms")) {
    job.terms = int_from_json(j["terms"], "terms");
    if (*job.terms < 1) throw ParseError("must be positive", "terms");
  }
  if (j.contains("skip")) {
    if (!j["skip"].is_array()) throw ParseError("expected an array", "skip");
    for (std::size_t i = 0; i < j["skip"].size(); ++i)
      job.skip.insert(static_cast<std::uint64_t>(int_from_json(j["skip"][i], "skip[" + std::to_string(i) + "]")));
  }
  if (j.contains("lambda")) job.lambda = parse_lambda(j["lambda"], "lambda");
  if (j.contains("output")) {
    const Json& o = j["output"];
    require_keys(o, "output", {"format", "path"});
    if (o.contains("format")) {
      if (!o["format"].is_string()) throw ParseError("expected a string", "output.format");
      job.format = format_from_string(o["format"].get<std::string>(), "output.format");
    }
    if (o.contains("path")) {
      if (!o["path"].is_string()) throw ParseError("expected a string", "output.path");
      job.json_path = o["path"].get<std::string>();
    }
  }
  if (j.contains("threads")) {
    const auto t = int_from_json(j["threads"], "threads");
    if (t < 1 || t > 256) throw ParseError("must lie in [1, 256]", "threads");
    job.threads = static_cast<unsigned>(t);
  }
  return job;
}

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), path);
  }
}

Json parse_json_text(const std::string& text, const std::string& what) {
  if (!text.empty() && text.front() == '@') return read_json_file(text.substr(1));
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), what);
  }
}

}  // namespace

Job parse_job_file(const std::string& path) { return parse_job_json(read_json_file(path)); }

std::optional<Job> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Gauss/Cartier congruences, p-curvature and zeta checks for coefficient sequences", "abelcong"};
  std::string job_path, spec_text, action, mode, primes, lambda, json_path, format;
  std::int64_t terms = 0;
  std::vector<std::uint64_t> skip;
  unsigned threads = 0;
  bool gauss = false, cartier = false;
  app.add_option("--job", job_path, "Job file (JSON); other flags override its fields");
  app.add_option("--spec", spec_text, "Sequence spec as JSON text, or @FILE");
  app.add_option("--action", action, "check-gauss | check-cartier | pcurvature | classify-hypergeom | dynzeta | dwork");
  app.add_option("--mode", mode, "gauss | cartier (shorthand for --action check-MODE)");
  app.add_flag("--gauss", gauss, "Same as --mode gauss");
  app.add_flag("--cartier", cartier, "Same as --mode cartier");
  app.add_option("--primes", primes, "Prime range MIN..MAX (default 3..50)");
  app.add_option("--terms", terms, "Index bound N (default 10*MAX)");
  app.add_option("--lambda", lambda, "Eisenstein scale: positive integer or auto (default 1)");
  app.add_option("--skip", skip, "Primes to skip")->delimiter(',');
  app.add_option("--json", json_path, "Write the JSON report to PATH");
  app.add_option("--format", format, "json | table | both (default both)");
  app.add_option("--threads", threads, "Worker threads for per-prime scans");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  if (gauss && cartier) throw ParseError("--gauss and --cartier are mutually exclusive");
  Job job;
  bool have_sequence = false;
  if (!job_path.empty()) {
    job = parse_job_file(job_path);
    have_sequence = true;
  }
  if (!spec_text.empty()) {
    job.sequence = spec_from_json(parse_json_text(spec_text, "--spec"), "sequence");
    have_sequence = true;
  }
  if (!have_sequence) throw ParseError("no sequence given; use --job or --spec");

  std::optional<Action> chosen;
  auto choose = [&](Action a, const std::string& flag) {
    if (chosen && *chosen != a) throw ParseError(flag + " conflicts with another action flag");
    chosen = a;
  };
  if (!action.empty()) choose(action_from_string(action), "--action");
  if (!mode.empty()) choose(mode_action(mode, "--mode"), "--mode");
  if (gauss) choose(Action::check_gauss, "--gauss");
  if (cartier) choose(Action::check_cartier, "--cartier");
  if (chosen) job.action = *chosen;
  else if (job_path.empty()) throw ParseError("no action given; use --action or --mode");

  if (!primes.empty()) std::tie(job.p_min, job.p_max) = parse_prime_range(primes, "--primes");
  if (app.count("--terms")) {
    if (terms < 1) throw ParseError("must be positive", "--terms");
    job.terms = terms;
  }
  if (!lambda.empty()) job.lambda = parse_lambda(lambda == "auto" ? Json("auto") : Json(lambda), "--lambda");
  job.skip.insert(skip.begin(), skip.end());
  if (!json_path.empty()) job.json_path = json_path;
  if (!format.empty()) job.format = format_from_string(format, "--format");
  if (app.count("--threads")) {
    if (threads < 1 || threads > 256) throw ParseError("must lie in [1, 256]", "--threads");
    job.threads = threads;
  }
  return job;
}

int run(const Job& job, std::ostream& out, std::ostream& err) {
  Json report;
  std::ostringstream table;
  int status = 0;
  try {
    switch (job.action) {
      case Action::check_gauss: status = run_check(job, CongruenceMode::gauss, report, table, err); break;
      case Action::check_cartier: status = run_check(job, CongruenceMode::cartier, report, table, err); break;
      case Action::pcurvature: status = run_pcurvature(job, report, table); break;
      case Action::classify_hypergeom: status = run_classify(job, report, table); break;
      case Action::dynzeta: status = run_dynzeta(job, report, table); break;
      case Action::dwork: status = run_dwork(job, report, table); break;
    }
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const Json::exception& e) {
    return report_error(e, err);
  }
  Json full;
  full["action"] = to_string(job.action);
  full["sequence"] = to_json(job.sequence);
  for (const auto& [k, v] : report.items()) full[k] = v;

  if (job.format != OutputFormat::json) out << table.str();
  if (job.json_path) {
    std::ofstream f(*job.json_path);
    if (!f) return report_error(ParseError("cannot write " + *job.json_path), err);
    f << full.dump(2) << '\n';
  } else if (job.format != OutputFormat::table) {
    out << full.dump(2) << '\n';
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto job = parse_args(argc, argv, out);
    if (!job) return 0;
    return run(*job, out, err);
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const Json::exception& e) {
    return report_error(e, err);
  }
}

}  // namespace abelcong::cli
