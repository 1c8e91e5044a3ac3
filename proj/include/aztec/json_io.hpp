#pragma once

#include <string>

#include "json.hpp"

#include "aztec/diamond.hpp"
#include "aztec/hankel.hpp"
#include "aztec/lgv.hpp"
#include "aztec/schroeder.hpp"

namespace aztec {

using Json = nlohmann::json;

// {"start_x": -3, "steps": "UULDDD"}
Json path_to_json(const SchroederPath& p);
SchroederPath path_from_json(const Json& j);

std::string scheme_name(SchemeKind kind);
SchemeKind scheme_from_name(const std::string& name);

// {"scheme": "pi", "n": 2, "paths": [...]}
Json family_to_json(const PathFamily& f);
PathFamily family_from_json(const Json& j);

// {"order": n, "dominoes": [{"x":.., "y":.., "o":"H"|"V"}, ...]},
// dominoes sorted by (y, x, o); from_json re-sorts and validates.
Json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

// Row-major array of decimal strings plus shape metadata; strings keep the
// entries exact at any magnitude.
Json matrix_to_json(const HankelMatrix& m);

}  // namespace aztec
