#include "abelcong/json_io.hpp"

#include <algorithm>
#include <set>

#include "abelcong/error.hpp"

namespace abelcong {

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("expected an array", path);
  return j;
}

ParamTuple tuple_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], at(path, i)));
  try {
    return ParamTuple(std::move(v));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), path);
  }
}

std::uint32_t conductor_from_json(const Json& j, const std::string& path) {
  const auto d = int_from_json(j, path);
  if (d < 1 || d > 100000) throw ParseError("conductor must lie in [1, 100000]", path);
  return static_cast<std::uint32_t>(d);
}

std::vector<Integer> counts_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Integer> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from_json(j[i], at(path, i)));
  return v;
}

/// Conductor named by the first field-element object in a tree of coefficients.
std::uint32_t find_conductor(const Json& j) {
  if (j.is_object()) {
    if (j.contains("coords") && j.contains("d") && j["d"].is_number_integer())
      return static_cast<std::uint32_t>(std::max<std::int64_t>(1, j["d"].get<std::int64_t>()));
    for (const auto& [k, v] : j.items())
      if (auto d = find_conductor(v); d) return d;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (auto d = find_conductor(v); d) return d;
  }
  return 0;
}

FieldRef field_for(const Json& obj, const std::string& path, const Json& coefficients) {
  if (obj.contains("d")) return CycloField::get(conductor_from_json(obj["d"], at(path, "d")));
  const auto d = find_conductor(coefficients);
  return CycloField::get(d ? d : 1);
}

/// Laurent polynomial: [{"exp": [...], "coef": ...}, ...]. nvars < 0 means infer.
LaurentPoly laurent_from_terms(const Json& terms, const std::string& path, const FieldRef& field,
                               std::int64_t nvars) {
  require_array(terms, path);
  if (nvars < 0) {
    nvars = 0;
    if (!terms.empty() && terms[0].is_object() && terms[0].contains("exp") && terms[0]["exp"].is_array())
      nvars = static_cast<std::int64_t>(terms[0]["exp"].size());
  }
  LaurentPoly poly(field, static_cast<std::size_t>(nvars));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = at(path, i);
    const Json& t = terms[i];
    if (!t.is_object()) throw ParseError("expected {\"exp\", \"coef\"}", tp);
    require_keys(t, tp, {"exp", "coef"});
    const Json& e = require_array(require_field(t, tp, "exp"), at(tp, "exp"));
    if (static_cast<std::int64_t>(e.size()) != nvars)
      throw ParseError("exponent has " + std::to_string(e.size()) + " entries, expected " + std::to_string(nvars),
                       at(tp, "exp"));
    Exponent ex;
    for (std::size_t k = 0; k < e.size(); ++k) ex.push_back(int_from_json(e[k], at(at(tp, "exp"), k)));
    const CycloElem c = cyclo_from_json(require_field(t, tp, "coef"), at(tp, "coef"), field);
    if (c.field() != field) throw ParseError("coefficient lives in a different field", at(tp, "coef"));
    poly.add_term(ex, c);
  }
  return poly;
}

/// Matrix entry: rational string, field element, or {"terms": [...]}.
LaurentPoly entry_from_json(const Json& j, const std::string& path, const FieldRef& field, std::int64_t nvars) {
  if (j.is_object() && j.contains("terms")) {
    require_keys(j, path, {"terms"});
    return laurent_from_terms(j["terms"], at(path, "terms"), field, nvars);
  }
  const CycloElem c = cyclo_from_json(j, path, field);
  if (c.field() != field) throw ParseError("entry lives in a different field", path);
  return LaurentPoly::constant(c, static_cast<std::size_t>(std::max<std::int64_t>(nvars, 0)));
}

std::int64_t infer_matrix_vars(const Json& entries) {
  for (const auto& row : entries) {
    if (!row.is_array()) continue;
    for (const auto& e : row)
      if (e.is_object() && e.contains("terms") && e["terms"].is_array() && !e["terms"].empty() &&
          e["terms"][0].is_object() && e["terms"][0].contains("exp") && e["terms"][0]["exp"].is_array())
        return static_cast<std::int64_t>(e["terms"][0]["exp"].size());
  }
  return 0;
}

Json laurent_terms_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", to_json(c)}});
  return terms;
}

PrimeStatus status_from_string(const std::string& s, const std::string& path) {
  if (s == "holds_to_bound") return PrimeStatus::holds_to_bound;
  if (s == "violation") return PrimeStatus::violation;
  if (s == "skipped") return PrimeStatus::skipped;
  throw ParseError("unknown status \"" + s + "\"", path);
}

}  // namespace

void require_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ParseError("expected an object", path);
  for (const auto& [k, v] : obj.items()) {
    const bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; });
    if (!ok) throw ParseError("unknown key", at(path, k));
  }
}

const Json& require_field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ParseError("expected an object", path);
  if (!obj.contains(key)) throw ParseError("missing key", at(path, key));
  return obj[key];
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) throw ParseError("expected a rational string \"a/b\"", path);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what(), path);
  }
}

Integer integer_from_json(const Json& j, const std::string& path) {
  const Rational q = rational_from_json(j, path);
  if (!q.is_integer()) throw ParseError("expected an integer", path);
  return q.numerator();
}

std::int64_t int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError("expected an integer", path);
  return j.get<std::int64_t>();
}

Json to_json(const Rational& q) { return q.str(); }

CycloElem cyclo_from_json(const Json& j, const std::string& path, const FieldRef& field) {
  if (j.is_string() || j.is_number_integer())
    return embed_rational(rational_from_json(j, path), field ? field : CycloField::get(1));
  if (!j.is_object()) throw ParseError("expected {\"d\", \"coords\"} or a rational string", path);
  require_keys(j, path, {"d", "coords"});
  const auto f = CycloField::get(conductor_from_json(require_field(j, path, "d"), at(path, "d")));
  const Json& cj = require_array(require_field(j, path, "coords"), at(path, "coords"));
  if (cj.size() != f->degree())
    throw ParseError("expected " + std::to_string(f->degree()) + " coordinates, got " + std::to_string(cj.size()),
                     at(path, "coords"));
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < cj.size(); ++i) coords.push_back(rational_from_json(cj[i], at(at(path, "coords"), i)));
  return CycloElem(f, std::move(coords));
}

Json to_json(const CycloElem& a) {
  Json coords = Json::array();
  for (const auto& c : a.coords()) coords.push_back(c.str());
  return {{"d", a.field()->conductor()}, {"coords", coords}};
}

SequenceSpec spec_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError("expected a sequence object", path);
  const Json& kj = require_field(j, path, "kind");
  if (!kj.is_string()) throw ParseError("expected a string", at(path, "kind"));
  const std::string kind = kj.get<std::string>();
  SequenceSpec out;
  if (kind == "hypergeometric") {
    require_keys(j, path, {"kind", "alpha", "beta", "scale"});
    spec::Hypergeometric h;
    h.alpha = tuple_from_json(require_field(j, path, "alpha"), at(path, "alpha"));
    h.beta = tuple_from_json(require_field(j, path, "beta"), at(path, "beta"));
    if (j.contains("scale")) h.scale = rational_from_json(j["scale"], at(path, "scale"));
    out = h;
  } else if (kind == "mixed-hypergeometric") {
    require_keys(j, path, {"kind", "alpha", "beta", "d", "xi_power"});
    spec::MixedHypergeometric m;
    m.alpha = tuple_from_json(require_field(j, path, "alpha"), at(path, "alpha"));
    m.beta = tuple_from_json(require_field(j, path, "beta"), at(path, "beta"));
    m.d = conductor_from_json(require_field(j, path, "d"), at(path, "d"));
    if (j.contains("xi_power")) m.xi_power = int_from_json(j["xi_power"], at(path, "xi_power"));
    out = m;
  } else if (kind == "laurent-ct") {
    require_keys(j, path, {"kind", "vars", "d", "terms"});
    const Json& terms = require_field(j, path, "terms");
    const std::int64_t nvars = j.contains("vars") ? int_from_json(j["vars"], at(path, "vars")) : -1;
    if (j.contains("vars") && nvars < 0) throw ParseError("must be non-negative", at(path, "vars"));
    out = spec::LaurentCT{laurent_from_terms(terms, at(path, "terms"), field_for(j, path, terms), nvars)};
  } else if (kind == "matrix-trace-ct") {
    require_keys(j, path, {"kind", "size", "vars", "d", "entries"});
    const Json& entries = require_array(require_field(j, path, "entries"), at(path, "entries"));
    const auto size = int_from_json(require_field(j, path, "size"), at(path, "size"));
    if (size < 1) throw ParseError("must be positive", at(path, "size"));
    if (entries.size() != static_cast<std::size_t>(size))
      throw ParseError("expected " + std::to_string(size) + " rows", at(path, "entries"));
    const std::int64_t nvars = j.contains("vars") ? int_from_json(j["vars"], at(path, "vars")) : infer_matrix_vars(entries);
    if (nvars < 0) throw ParseError("must be non-negative", at(path, "vars"));
    const FieldRef field = field_for(j, path, entries);
    std::vector<LaurentPoly> polys;
    for (std::size_t r = 0; r < entries.size(); ++r) {
      const std::string rp = at(at(path, "entries"), r);
      const Json& row = require_array(entries[r], rp);
      if (row.size() != static_cast<std::size_t>(size))
        throw ParseError("expected " + std::to_string(size) + " entries", rp);
      for (std::size_t c = 0; c < row.size(); ++c) polys.push_back(entry_from_json(row[c], at(rp, c), field, nvars));
    }
    out = spec::MatrixTraceCT{LaurentMatrix(static_cast<std::size_t>(size), static_cast<std::size_t>(size),
                                            std::move(polys))};
  } else if (kind == "orbits") {
    require_keys(j, path, {"kind", "counts"});
    out = spec::Orbits{counts_from_json(require_field(j, path, "counts"), at(path, "counts"))};
  } else if (kind == "fix") {
    require_keys(j, path, {"kind", "counts"});
    out = spec::FixCounts{counts_from_json(require_field(j, path, "counts"), at(path, "counts"))};
  } else if (kind == "explicit") {
    require_keys(j, path, {"kind", "offset", "d", "terms"});
    spec::Explicit e;
    if (j.contains("offset")) e.offset = int_from_json(j["offset"], at(path, "offset"));
    const Json& terms = require_array(require_field(j, path, "terms"), at(path, "terms"));
    e.field = field_for(j, path, terms);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      CycloElem c = cyclo_from_json(terms[i], at(at(path, "terms"), i), e.field);
      if (c.field() != e.field) throw ParseError("term lives in a different field", at(at(path, "terms"), i));
      e.terms.push_back(std::move(c));
    }
    out = std::move(e);
  } else {
    throw ParseError("unknown kind \"" + kind + "\"", at(path, "kind"));
  }
  try {
    validate(out);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), path);
  }
  return out;
}

Json to_json(const SequenceSpec& s) {
  Json j;
  j["kind"] = kind_name(s);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, spec::Hypergeometric>) {
          j["alpha"] = to_json(v.alpha);
          j["beta"] = to_json(v.beta);
          j["scale"] = v.scale.str();
        } else if constexpr (std::is_same_v<T, spec::MixedHypergeometric>) {
          j["alpha"] = to_json(v.alpha);
          j["beta"] = to_json(v.beta);
          j["d"] = v.d;
          j["xi_power"] = v.xi_power;
        } else if constexpr (std::is_same_v<T, spec::LaurentCT>) {
          j["vars"] = v.lambda.nvars();
          j["d"] = v.lambda.field()->conductor();
          j["terms"] = laurent_terms_json(v.lambda);
        } else if constexpr (std::is_same_v<T, spec::MatrixTraceCT>) {
          j["size"] = v.matrix.rows();
          j["vars"] = v.matrix.nvars();
          j["d"] = v.matrix.field()->conductor();
          Json rows = Json::array();
          for (std::size_t r = 0; r < v.matrix.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < v.matrix.cols(); ++c) row.push_back({{"terms", laurent_terms_json(v.matrix(r, c))}});
            rows.push_back(row);
          }
          j["entries"] = rows;
        } else if constexpr (std::is_same_v<T, spec::Orbits> || std::is_same_v<T, spec::FixCounts>) {
          Json c = Json::array();
          for (const auto& x : v.counts) c.push_back(x.get_str());
          j["counts"] = c;
        } else {
          j["offset"] = v.offset;
          j["d"] = v.field->conductor();
          Json t = Json::array();
          for (const auto& x : v.terms) t.push_back(to_json(x));
          j["terms"] = t;
        }
      },
      s);
  return j;
}

Json to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Valuation valuation_from_json(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return Valuation::infinity();
  return Valuation(int_from_json(j, path));
}

Json to_json(const PrimeRecord& r) {
  Json j;
  j["p"] = r.p;
  j["status"] = to_string(r.status);
  if (r.status != PrimeStatus::skipped) {
    j["pairs_checked"] = r.pairs_checked;
    j["index_bound"] = r.index_bound;
  }
  if (r.witness)
    j["witness"] = {{"n", r.witness->n}, {"valuation", to_json(r.witness->valuation)},
                    {"required", to_json(r.witness->required)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const CongruenceReport& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["max_index"] = r.max_index;
  j["verdict"] = to_string(r.verdict());
  Json primes = Json::array();
  for (const auto& rec : r.primes) primes.push_back(to_json(rec));
  j["primes"] = primes;
  return j;
}

CongruenceReport report_from_json(const Json& j, const std::string& path) {
  // Reports emitted by the command-line tool also carry the job context.
  require_keys(j, path, {"action", "sequence", "mode", "max_index", "verdict", "primes", "diagnostics"});
  CongruenceReport r;
  if (j.contains("mode")) {
    const Json& m = j["mode"];
    if (m == "gauss") r.mode = CongruenceMode::gauss;
    else if (m == "cartier") r.mode = CongruenceMode::cartier;
    else throw ParseError("expected \"gauss\" or \"cartier\"", at(path, "mode"));
  }
  if (j.contains("max_index")) r.max_index = int_from_json(j["max_index"], at(path, "max_index"));
  const Json& primes = require_array(require_field(j, path, "primes"), at(path, "primes"));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::string pp = at(at(path, "primes"), i);
    const Json& pj = primes[i];
    require_keys(pj, pp, {"p", "status", "pairs_checked", "index_bound", "witness", "reason"});
    PrimeRecord rec;
    rec.p = static_cast<std::uint64_t>(int_from_json(require_field(pj, pp, "p"), at(pp, "p")));
    const Json& st = require_field(pj, pp, "status");
    if (!st.is_string()) throw ParseError("expected a string", at(pp, "status"));
    rec.status = status_from_string(st.get<std::string>(), at(pp, "status"));
    if (pj.contains("pairs_checked"))
      rec.pairs_checked = static_cast<std::uint64_t>(int_from_json(pj["pairs_checked"], at(pp, "pairs_checked")));
    if (pj.contains("index_bound")) rec.index_bound = int_from_json(pj["index_bound"], at(pp, "index_bound"));
    if (pj.contains("witness")) {
      const std::string wp = at(pp, "witness");
      const Json& wj = pj["witness"];
      require_keys(wj, wp, {"n", "valuation", "required"});
      Witness w;
      w.n = int_from_json(require_field(wj, wp, "n"), at(wp, "n"));
      w.valuation = valuation_from_json(require_field(wj, wp, "valuation"), at(wp, "valuation"));
      w.required = valuation_from_json(require_field(wj, wp, "required"), at(wp, "required"));
      rec.witness = w;
    }
    if (pj.contains("reason")) {
      if (!pj["reason"].is_string()) throw ParseError("expected a string", at(pp, "reason"));
      rec.reason = pj["reason"].get<std::string>();
    }
    r.primes.push_back(std::move(rec));
  }
  if (j.contains("verdict") && j["verdict"] != to_string(r.verdict()))
    throw ParseError("verdict does not match the prime records", at(path, "verdict"));
  return r;
}

Json to_json(const PCurvatureVerdict& v) {
  Json j;
  j["p"] = v.p;
  if (v.zero) {
    j["pcurvature"] = "zero_to_order";
    j["order"] = v.order;
  } else {
    j["pcurvature"] = "nonzero";
    j["witness_exponent"] = *v.witness_exponent;
  }
  return j;
}

Json to_json(const ParamTuple& t) {
  Json a = Json::array();
  for (const auto& q : t) a.push_back(q.str());
  return a;
}

Json to_json(const Classification& c) {
  Json fam = Json::array();
  for (const auto& f : c.family) fam.push_back({{"k", f.k}, {"alpha", to_json(f.alpha)}, {"beta", to_json(f.beta)}});
  Json j;
  j["algebraic_interlacing"] = c.algebraic_interlacing;
  j["factorial"] = c.factorial;
  j["d"] = c.d;
  j["family"] = fam;
  if (!c.balanced) j["balanced"] = false;
  return j;
}

Json to_json(const DworkVerdict& v) {
  Json j;
  j["p"] = v.p;
  j["dwork"] = v.holds ? "holds_to_order" : "violation";
  j["order"] = v.order;
  if (v.witness_exponent) {
    j["witness_exponent"] = *v.witness_exponent;
    j["valuation"] = to_json(v.witness_valuation);
  }
  return j;
}

}  // namespace abelcong
