#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of rationals, field elements, sequence specs and reports.
 *
 * Parsing is strict: unknown keys and malformed values raise ParseError with
 * the JSON path of the offending value (e.g. "sequence.alpha[1]").
 */

#include <string>

#include <json.hpp>

#include "abelcong/congruence.hpp"
#include "abelcong/cyclotomic.hpp"
#include "abelcong/dynzeta.hpp"
#include "abelcong/hypergeom.hpp"
#include "abelcong/pcurvature.hpp"
#include "abelcong/rational.hpp"
#include "abelcong/sequences.hpp"

namespace abelcong {

using Json = nlohmann::ordered_json;

/// Throws ParseError naming the first key of obj not in allowed.
void require_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed);
const Json& require_field(const Json& obj, const std::string& path, const char* key);

Rational rational_from_json(const Json& j, const std::string& path);
Integer integer_from_json(const Json& j, const std::string& path);
std::int64_t int_from_json(const Json& j, const std::string& path);
Json to_json(const Rational& q);

/// Accepts {"d": int, "coords": [...]} or a rational string (embedded in
/// `field`, or in Q when field is null).
CycloElem cyclo_from_json(const Json& j, const std::string& path, const FieldRef& field = nullptr);
Json to_json(const CycloElem& a);

SequenceSpec spec_from_json(const Json& j, const std::string& path = "sequence");
Json to_json(const SequenceSpec& s);

Json to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j, const std::string& path);
Json to_json(const PrimeRecord& r);
Json to_json(const CongruenceReport& r);
CongruenceReport report_from_json(const Json& j, const std::string& path = "report");

Json to_json(const PCurvatureVerdict& v);
Json to_json(const ParamTuple& t);
Json to_json(const Classification& c);
Json to_json(const DworkVerdict& v);

}  // namespace abelcong
