#pragma once

// Parsing of polynomial systems (JSON or terse text) and JSON serialization.

#include "fewroots/bounds.hpp"
#include "fewroots/oracle.hpp"
#include "fewroots/polyhedra.hpp"
#include "fewroots/polynomial.hpp"

#include <json.hpp>

#include <string_view>

namespace fewroots {

using Json = nlohmann::json;

/// {"n": int, "polynomials": [[{"exp": [ints], "coeff": "num/den"}, ...], ...]}
SparseSystem parse_system_json(const Json& j);
/// One polynomial per line or per ';', e.g. "3*x1^10 + x1^2 - 4". The variable
/// count is the largest index used unless `nvars` is given.
SparseSystem parse_system_text(std::string_view text, std::size_t nvars = 0);
/// JSON when the first non-blank character is '{', text otherwise.
SparseSystem parse_system(std::string_view input);

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(const ExtendedValuation& v);
Json to_json(const Polytope& p);
Json to_json(const SparseSystem& system);
Json to_json(const BoundReport& report);
Json to_json(const RootCount& count);

}  // namespace fewroots
