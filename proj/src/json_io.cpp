#include "aztec/json_io.hpp"

#include <algorithm>
#include <tuple>

#include "aztec/errors.hpp"

namespace aztec {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer())
    throw ValidationError(std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Json path_to_json(const SchroederPath& p) {
  return Json{{"start_x", p.start_x}, {"steps", p.step_string()}};
}

SchroederPath path_from_json(const Json& j) {
  return SchroederPath::from_steps(require_int(j, "start_x"),
                                   require(j, "steps").get<std::string>());
}

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Pi: return "pi";
    case SchemeKind::Omega: return "omega";
    case SchemeKind::PiStar: return "pistar";
  }
  throw InternalConsistencyError("unknown scheme kind");
}

SchemeKind scheme_from_name(const std::string& name) {
  if (name == "pi") return SchemeKind::Pi;
  if (name == "omega") return SchemeKind::Omega;
  if (name == "pistar") return SchemeKind::PiStar;
  throw ValidationError("unknown scheme \"" + name +
                        "\", expected pi, omega or pistar");
}

Json family_to_json(const PathFamily& f) {
  Json paths = Json::array();
  for (const SchroederPath& p : f.paths) paths.push_back(path_to_json(p));
  return Json{{"scheme", scheme_name(f.scheme.kind)},
              {"n", f.scheme.n},
              {"paths", std::move(paths)}};
}

PathFamily family_from_json(const Json& j) {
  PathFamily f;
  f.scheme.kind = scheme_from_name(require(j, "scheme").get<std::string>());
  f.scheme.n = require_int(j, "n");
  for (const Json& p : require(j, "paths")) f.paths.push_back(path_from_json(p));
  validate_family(f);
  return f;
}

Json tiling_to_json(const Tiling& t) {
  Json dominoes = Json::array();
  for (const Domino& d : t.dominoes) {
    dominoes.push_back(
        Json{{"x", d.anchor.x},
             {"y", d.anchor.y},
             {"o", d.orientation == Orientation::Horizontal ? "H" : "V"}});
  }
  return Json{{"order", t.order}, {"dominoes", std::move(dominoes)}};
}

Tiling tiling_from_json(const Json& j) {
  Tiling t;
  t.order = require_int(j, "order");
  for (const Json& d : require(j, "dominoes")) {
    const std::string o = require(d, "o").get<std::string>();
    if (o != "H" && o != "V")
      throw ValidationError("orientation must be \"H\" or \"V\"");
    t.dominoes.push_back(Domino{{require_int(d, "x"), require_int(d, "y")},
                                o == "H" ? Orientation::Horizontal
                                         : Orientation::Vertical});
  }
  std::sort(t.dominoes.begin(), t.dominoes.end(),
            [](const Domino& a, const Domino& b) {
              return std::tie(a.anchor.y, a.anchor.x, a.orientation) <
                     std::tie(b.anchor.y, b.anchor.x, b.orientation);
            });
  validate_tiling(t);
  return t;
}

Json matrix_to_json(const HankelMatrix& m) {
  Json entries = Json::array();
  for (const BigCount& e : m.entries()) entries.push_back(e.str());
  return Json{{"order", m.order()},
              {"offset", m.offset()},
              {"entries", std::move(entries)}};
}

}  // namespace aztec
