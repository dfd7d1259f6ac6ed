#pragma once

#include <json.hpp>

#include "icl/coloring.hpp"
#include "icl/families.hpp"
#include "icl/gf.hpp"
#include "icl/index_code.hpp"

namespace icl {

using Json = nlohmann::ordered_json;

/// {"q": int, "rows": int, "cols": int, "data": [[...], ...]}
Json to_json(const GfMatrix& m);
GfMatrix matrix_from_json(const Json& j);

/// Field, matrix, blocks, rate "s/r", and construction metadata.
Json to_json(const IndexCode& code);
IndexCode index_code_from_json(const Json& j);

Json to_json(const VerificationReport& report);

Json to_json(const ProperColoring& c);
Json to_json(const LocalColoring& c);
Json to_json(const FractionalSolution& sol);
Json to_json(const RFoldColoring& c);
Json to_json(const IntegerCover& cover);
Json to_json(const RatioReport& report);

/// {"invariant": name, "value": "p/q", "decimal": "...", "exact": bool, "witness": {...}}
Json invariant_json(const std::string& name, const Rational& value, const Json& witness, bool exact = true);

}  // namespace icl
