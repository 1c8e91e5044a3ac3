#include "doctest.h"

#include <random>
#include <string>

#include "aztec/diamond.hpp"
#include "aztec/errors.hpp"
#include "aztec/hankel.hpp"
#include "aztec/json_io.hpp"
#include "aztec/svg.hpp"

using namespace aztec;

TEST_CASE("path JSON shape and round-trip") {
  const auto p = SchroederPath::from_steps(-3, "UULDD");
  const Json j = path_to_json(p);
  CHECK(j.at("start_x") == -3);
  CHECK(j.at("steps") == "UULDD");
  CHECK(path_from_json(j) == p);
  CHECK_THROWS_AS(path_from_json(Json{{"steps", "UD"}}), ValidationError);
}

TEST_CASE("family and tiling JSON round-trip over whole enumerations") {
  for (const auto& f : enumerate_family(AnchorScheme{SchemeKind::Omega, 2}))
    CHECK(family_from_json(family_to_json(f)) == f);
  for (const auto& t : enumerate_tilings(2))
    CHECK(tiling_from_json(tiling_to_json(t)) == t);
}

TEST_CASE("tiling JSON validates and canonicalizes") {
  const Json bad{{"order", 1},
                 {"dominoes", Json::array({Json{{"x", 5}, {"y", 5}, {"o", "H"}},
                                           Json{{"x", -1}, {"y", -1}, {"o", "H"}},
                                           Json{{"x", -1}, {"y", 0}, {"o", "H"}}})}};
  CHECK_THROWS_WITH_AS(tiling_from_json(bad), doctest::Contains("(5, 5, H)"),
                       ValidationError);

  // unsorted input is accepted and canonicalized
  const Json shuffled{
      {"order", 1},
      {"dominoes", Json::array({Json{{"x", -1}, {"y", 0}, {"o", "H"}},
                                Json{{"x", -1}, {"y", -1}, {"o", "H"}}})}};
  const Tiling t = tiling_from_json(shuffled);
  CHECK(t.dominoes.front().anchor == Cell{-1, -1});
}

TEST_CASE("matrix JSON keeps entries as decimal strings") {
  const auto m = build_hankel(HankelKind::H1, 8);
  const Json j = matrix_to_json(m);
  CHECK(j.at("order") == 8);
  CHECK(j.at("offset") == 1);
  REQUIRE(j.at("entries").size() == 64);
  CHECK(j.at("entries")[0] == "2");
  for (const auto& e : j.at("entries")) CHECK(e.is_string());
  // r_15 overflows no string
  CHECK(j.at("entries").back() == large_schroeder(15).str());
}

TEST_CASE("SVG rendering is deterministic and structured") {
  const auto tilings = enumerate_tilings(2);
  RenderOptions opts;
  opts.overlay_paths = true;
  const std::string a = render_tiling_svg(tilings[3], opts);
  const std::string b = render_tiling_svg(tilings[3], opts);
  CHECK(a == b);  // byte-identical
  CHECK(a.starts_with("<svg"));
  CHECK(a.find("</svg>") != std::string::npos);

  // one rect per domino plus the background, one polyline per row path
  std::size_t rects = 0, polylines = 0, at = 0;
  while ((at = a.find("<rect", at)) != std::string::npos) ++rects, ++at;
  at = 0;
  while ((at = a.find("<polyline", at)) != std::string::npos) ++polylines, ++at;
  CHECK(rects == tilings[3].dominoes.size() + 1);
  CHECK(polylines == 2);

  const std::string plain = render_tiling_svg(tilings[3]);
  CHECK(plain.find("<polyline") == std::string::npos);
  CHECK(plain != a);
}
