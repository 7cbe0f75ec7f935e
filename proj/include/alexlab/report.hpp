#pragma once

#include <string>

#include <json.hpp>

#include "alexlab/chen.hpp"
#include "alexlab/extensions.hpp"
#include "alexlab/fox.hpp"
#include "alexlab/lie.hpp"
#include "alexlab/modtools.hpp"

namespace alexlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "alexlab/1";
const char* version();

/// Rationals serialize as "p/q" strings (integers as "n"); integer counts as
/// JSON numbers when they fit, strings otherwise.
Json to_json(const Rational& q);
Json integer_json(const Integer& z);

Json to_json(const GradedDims& d);
Json to_json(const Ideal& ideal);
Json to_json(const ModulePresentation& m);
Json to_json(const GroupAlgebraMatrix& m);
Json to_json(const CharacterPoint& chi);
Json to_json(const CyclotomicField::Elem& v, int conductor);
Json to_json(const CupData& cd);
Json to_json(const AbelianizationData& ab);
Json to_json(const FiniteModule& m);
Json to_json(const ActionMatrix& a);
Json to_json(const ExtensionReport& r);

/// {"schema", "version", "verb", "input"} followed by the fields of `result`.
Json envelope(const std::string& verb, const std::string& canonical_input, const Json& result);

/// Aligned two-column rendering of a flat report; nested values are printed
/// as compact JSON.
std::string to_table(const Json& report);

}  // namespace alexlab
