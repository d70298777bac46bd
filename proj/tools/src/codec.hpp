#pragma once

#include <string_view>

#include <json.hpp>

#include "monadica/calculus.hpp"
#include "monadica/generalized_real.hpp"
#include "monadica/generalized_set.hpp"
#include "monadica/piecewise.hpp"
#include "monadica/real_set.hpp"
#include "monadica/verify.hpp"

namespace monadica::cli {

using json = nlohmann::ordered_json;

/// Integral values below 2^53 become JSON integers ("1", not "1.0").
json number(double v);

/// Throws Error(ParseError) on malformed text.
json parse_json(std::string_view text);

/// {"shadow": n, "d": {"<id>": n, ...}}
json encode(const GeneralizedReal& x);
/// Accepts the object form or a bare number. Throws Error(ParseError),
/// Error(NonFiniteInput) or Error(UnknownGenerator).
GeneralizedReal decode_value(const json& j);

/// {"intervals": [...], "points": [...]}
json encode(const sets::RealSet& s);
/// {"intervals": [...], "points": [...], "extras": [...]}
json encode(const sets::GeneralizedSet& g);
sets::GeneralizedSet decode_set(const json& j);

json encode(const calc::TaylorResult& t);
json encode(const calc::OdeReport& r);
json encode(const verify::SuiteReport& r);

}  // namespace monadica::cli
