#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <vector>

#include "aztec/diamond.hpp"
#include "aztec/errors.hpp"
#include "aztec/hankel.hpp"
#include "aztec/json_io.hpp"

using namespace aztec;

namespace {

Tiling load_fixture(const char* name) {
  std::ifstream in(std::string(AZTEC_TEST_DIR) + "/fixtures/" + name);
  REQUIRE(in.good());
  Json j;
  in >> j;
  return tiling_from_json(j);
}

}  // namespace

TEST_CASE("region cells: corner condition oracle and cardinality") {
  SUBCASE("n = 1 by checking every candidate anchor") {
    std::set<Cell> oracle;
    for (int x = -2; x <= 1; ++x) {
      for (int y = -2; y <= 1; ++y) {
        bool ok = true;
        for (int dx = 0; dx <= 1; ++dx)
          for (int dy = 0; dy <= 1; ++dy)
            if (std::abs(x + dx) + std::abs(y + dy) > 2) ok = false;
        if (ok) oracle.insert({x, y});
      }
    }
    CHECK(oracle == std::set<Cell>{{-1, -1}, {0, -1}, {-1, 0}, {0, 0}});
    const auto cells = region_cells(1);
    CHECK(std::set<Cell>(cells.begin(), cells.end()) == oracle);
  }
  SUBCASE("cardinality 2n(n+1) and (y, x) order") {
    for (int n = 1; n <= 6; ++n) {
      const auto cells = region_cells(n);
      CHECK(static_cast<int>(cells.size()) == 2 * n * (n + 1));
      CHECK(std::is_sorted(cells.begin(), cells.end(),
                           [](const Cell& a, const Cell& b) {
                             return std::tie(a.y, a.x) < std::tie(b.y, b.x);
                           }));
    }
  }
}

TEST_CASE("tiling enumeration matches the closed form and stays valid") {
  CHECK(enumerate_tilings(1).size() == 2);
  CHECK(enumerate_tilings(2).size() == 8);
  CHECK(enumerate_tilings(3).size() == 64);
  CHECK_THROWS_AS(enumerate_tilings(6), SizeLimitError);

  for (int n = 1; n <= 3; ++n) {
    const auto tilings = enumerate_tilings(n);
    std::set<Tiling> distinct;
    for (const Tiling& t : tilings) {
      CHECK_NOTHROW(validate_tiling(t));
      CHECK(static_cast<int>(t.dominoes.size()) == n * (n + 1));
      distinct.insert(t);
    }
    CHECK(distinct.size() == tilings.size());
  }
}

TEST_CASE("count_tilings: three routes agree") {
  CHECK(count_tilings(4, CountMethod::Formula) == 1024);
  CHECK(count_tilings(3, CountMethod::Determinant) == 64);
  CHECK(count_tilings(2, CountMethod::Enumeration) == 8);
  for (int n = 1; n <= 4; ++n) {
    const auto formula = count_tilings(n, CountMethod::Formula);
    CHECK(formula == count_tilings(n, CountMethod::Determinant));
    CHECK(formula == count_tilings(n, CountMethod::Enumeration));
  }
}

TEST_CASE("the two order-1 tilings map to L and UD") {
  const auto tilings = enumerate_tilings(1);
  REQUIRE(tilings.size() == 2);
  for (const Tiling& t : tilings) {
    const PathFamily f = tiling_to_paths(t);
    REQUIRE(f.paths.size() == 1);
    const bool horizontal =
        t.dominoes[0].orientation == Orientation::Horizontal;
    CHECK(f.paths[0].step_string() == (horizontal ? "L" : "UD"));
    CHECK(f.paths[0].start_x == -1);
    CHECK(paths_to_tiling(f) == t);
  }
}

TEST_CASE("psi: exhaustive round-trips and image counts for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto tilings = enumerate_tilings(n);
    std::set<std::vector<std::string>> images;
    for (const Tiling& t : tilings) {
      const PathFamily f = tiling_to_paths(t);
      CHECK_NOTHROW(validate_family(f));     // (A1)
      CHECK(is_nonintersecting(f));          // (A2)
      CHECK(paths_to_tiling(f) == t);
      std::vector<std::string> key;
      for (const auto& p : f.paths) key.push_back(p.step_string());
      images.insert(std::move(key));
    }
    CHECK(images.size() == tilings.size());  // injective
    CHECK(BigCount(images.size()) == closed_form(HankelKind::H1, n));
  }
}

TEST_CASE("psi inverse covers all families: family -> tiling -> family") {
  for (int n = 1; n <= 3; ++n) {
    for (const PathFamily& f :
         enumerate_family(AnchorScheme{SchemeKind::Pi, n})) {
      CHECK(tiling_to_paths(paths_to_tiling(f)) == f);
    }
  }
}

TEST_CASE("fixture: a mixed Az(3) tiling and its frozen path triple") {
  const Tiling t = load_fixture("az3_fountain.json");
  REQUIRE(t.dominoes.size() == 12);
  const PathFamily f = tiling_to_paths(t);
  REQUIRE(f.paths.size() == 3);
  CHECK(f.paths[0].step_string() == "UD");
  CHECK(f.paths[1].step_string() == "UULDD");
  CHECK(f.paths[2].step_string() == "UUULLDDD");
  CHECK(f.paths[0].start_x == -1);
  CHECK(f.paths[1].start_x == -3);
  CHECK(f.paths[2].start_x == -5);
  CHECK(is_nonintersecting(f));
  CHECK(paths_to_tiling(f) == t);

  // the stripped row paths, in doubled coordinates
  const auto lines = tiling_path_polylines(t);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].front() == Point{-2, -5});
  CHECK(lines[0].back() == Point{2, -5});
  CHECK(lines[2].front() == Point{-6, -1});
  CHECK(lines[2].back() == Point{6, -1});
}

TEST_CASE("paths_to_tiling rejects bad families") {
  PathFamily crossing{AnchorScheme{SchemeKind::Pi, 2}, {}};
  crossing.paths.push_back(SchroederPath::from_steps(-1, "L"));
  crossing.paths.push_back(SchroederPath::from_steps(-3, "LLL"));
  CHECK_THROWS_AS(paths_to_tiling(crossing), DomainError);

  PathFamily wrong_anchor{AnchorScheme{SchemeKind::Pi, 1}, {}};
  wrong_anchor.paths.push_back(SchroederPath::from_steps(0, "L"));
  CHECK_THROWS_AS(paths_to_tiling(wrong_anchor), DomainError);

  CHECK_THROWS_AS(
      paths_to_tiling(PathFamily{AnchorScheme{SchemeKind::Omega, 1},
                                 {SchroederPath::from_steps(-1, "UD")}}),
      DomainError);
}

TEST_CASE("validate_tiling reports the first offending domino") {
  Tiling overlap{1,
                 {Domino{{-1, -1}, Orientation::Horizontal},
                  Domino{{-1, -1}, Orientation::Vertical}}};
  CHECK_THROWS_WITH_AS(validate_tiling(overlap),
                       doctest::Contains("(-1, -1, V)"), ValidationError);

  Tiling outside{1, {Domino{{1, 1}, Orientation::Horizontal}}};
  CHECK_THROWS_AS(validate_tiling(outside), ValidationError);

  Tiling incomplete{1, {Domino{{-1, -1}, Orientation::Horizontal}}};
  CHECK_THROWS_AS(validate_tiling(incomplete), ValidationError);
}
