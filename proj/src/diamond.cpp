#include "aztec/diamond.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "aztec/errors.hpp"
#include "aztec/hankel.hpp"

namespace aztec {

bool cell_in_region(const Cell& c, int n) {
  const auto corner_ok = [n](int x, int y) {
    return std::abs(x) + std::abs(y) <= n + 1;
  };
  return corner_ok(c.x, c.y) && corner_ok(c.x + 1, c.y) &&
         corner_ok(c.x, c.y + 1) && corner_ok(c.x + 1, c.y + 1);
}

std::vector<Cell> region_cells(int n) {
  if (n < 1) throw DomainError("region order must be >= 1");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(2 * n) * (n + 1));
  for (int y = -(n + 1); y <= n; ++y)
    for (int x = -(n + 1); x <= n; ++x)
      if (cell_in_region({x, y}, n)) cells.push_back({x, y});
  return cells;  // (y, x) sorted by construction
}

std::array<Cell, 2> Domino::cells() const {
  if (orientation == Orientation::Horizontal)
    return {anchor, Cell{anchor.x + 1, anchor.y}};
  return {anchor, Cell{anchor.x, anchor.y + 1}};
}

namespace {

// dense cell -> region index lookup over the bounding box of the region
class CellIndex {
 public:
  explicit CellIndex(int n)
      : n_(n), side_(2 * n + 2), map_(side_ * side_, -1), cells_(region_cells(n)) {
    for (int i = 0; i < static_cast<int>(cells_.size()); ++i)
      map_[flat(cells_[i])] = i;
  }

  int index(const Cell& c) const {
    if (c.x < -(n_ + 1) || c.x > n_ || c.y < -(n_ + 1) || c.y > n_) return -1;
    return map_[flat(c)];
  }

  const std::vector<Cell>& cells() const { return cells_; }

 private:
  std::size_t flat(const Cell& c) const {
    return static_cast<std::size_t>(c.y + n_ + 1) * side_ + (c.x + n_ + 1);
  }

  int n_;
  int side_;
  std::vector<int> map_;
  std::vector<Cell> cells_;
};

std::string domino_text(const Domino& d) {
  return "domino (" + std::to_string(d.anchor.x) + ", " +
         std::to_string(d.anchor.y) +
         (d.orientation == Orientation::Horizontal ? ", H)" : ", V)");
}

}  // namespace

void validate_tiling(const Tiling& t) {
  if (t.order < 1) throw ValidationError("tiling order must be >= 1");
  const CellIndex idx(t.order);
  std::vector<char> covered(idx.cells().size(), 0);
  for (const Domino& d : t.dominoes) {
    for (const Cell& c : d.cells()) {
      const int i = idx.index(c);
      if (i < 0)
        throw ValidationError(domino_text(d) + " leaves the region");
      if (covered[i])
        throw ValidationError(domino_text(d) + " overlaps another domino");
      covered[i] = 1;
    }
  }
  if (!std::ranges::all_of(covered, [](char c) { return c != 0; }))
    throw ValidationError("tiling does not cover the region");
  if (!std::is_sorted(t.dominoes.begin(), t.dominoes.end(),
                      [](const Domino& a, const Domino& b) {
                        return std::tie(a.anchor.y, a.anchor.x, a.orientation) <
                               std::tie(b.anchor.y, b.anchor.x, b.orientation);
                      }))
    throw ValidationError("dominoes are not in canonical (y, x, o) order");
}

std::vector<Tiling> enumerate_tilings(int n, int max_n) {
  if (n < 1) throw DomainError("region order must be >= 1");
  if (n > max_n) {
    throw SizeLimitError("tiling enumeration is limited to n <= " +
                         std::to_string(max_n) +
                         "; raise --max-enum-n to go further");
  }
  const CellIndex idx(n);
  const auto& cells = idx.cells();
  std::vector<char> covered(cells.size(), 0);
  std::vector<Domino> current;
  current.reserve(cells.size() / 2);
  std::vector<Tiling> out;

  auto search = [&](auto&& self, std::size_t from) -> void {
    while (from < cells.size() && covered[from]) ++from;
    if (from == cells.size()) {
      out.push_back(Tiling{n, current});
      return;
    }
    const Cell c = cells[from];
    for (Orientation o : {Orientation::Horizontal, Orientation::Vertical}) {
      const Domino d{c, o};
      const int other = idx.index(d.cells()[1]);
      if (other < 0 || covered[other]) continue;
      covered[from] = covered[other] = 1;
      current.push_back(d);
      self(self, from + 1);
      current.pop_back();
      covered[from] = covered[other] = 0;
    }
  };
  search(search, 0);
  return out;
}

BigCount count_tilings(int n, CountMethod method, int max_n) {
  if (n < 1) throw DomainError("region order must be >= 1");
  switch (method) {
    case CountMethod::Formula:
      return pow2(static_cast<unsigned long long>(n) * (n + 1) / 2);
    case CountMethod::Determinant:
      return determinant(build_hankel(HankelKind::H1, n));
    case CountMethod::Enumeration:
      return BigCount(enumerate_tilings(n, max_n).size());
  }
  throw DomainError("unknown counting method");
}

std::vector<std::vector<Point>> tiling_path_polylines(const Tiling& t) {
  validate_tiling(t);
  const int n = t.order;
  const CellIndex idx(n);
  std::vector<int> domino_of(idx.cells().size(), -1);
  for (int d = 0; d < static_cast<int>(t.dominoes.size()); ++d)
    for (const Cell& c : t.dominoes[d].cells())
      domino_of[idx.index(c)] = d;

  std::vector<std::vector<Point>> polylines;
  polylines.reserve(n);
  for (int i = 1; i <= n; ++i) {
    // midpoint of the left edge of row i, doubled coordinates
    Point p{-2 * i, 2 * i - 2 * n - 1};
    std::vector<Point> line{p};
    while (true) {
      const Cell c{p.x / 2, (p.y - 1) / 2};  // cell east of p; exact: p.x even
      const int ci = idx.index(c);
      if (ci < 0) break;  // left the region: the row is fully crossed
      const Domino& d = t.dominoes[domino_of[ci]];
      const int ax = 2 * d.anchor.x, ay = 2 * d.anchor.y;
      if (d.orientation == Orientation::Horizontal) {
        if (p.x != ax || p.y != ay + 1)
          throw InternalConsistencyError(
              "path enters a horizontal domino off its west edge");
        p = {p.x + 4, p.y};
      } else if (p.x == ax && p.y == ay + 1) {  // lower cell: climb
        p = {p.x + 2, p.y + 2};
      } else if (p.x == ax && p.y == ay + 3) {  // upper cell: descend
        p = {p.x + 2, p.y - 2};
      } else {
        throw InternalConsistencyError(
            "path enters a vertical domino off a west edge");
      }
      line.push_back(p);
    }
    if (p.x != 2 * i || p.y != 2 * i - 2 * n - 1)
      throw InternalConsistencyError(
          "row crossing did not end at the right edge of its row");
    polylines.push_back(std::move(line));
  }
  return polylines;
}

PathFamily tiling_to_paths(const Tiling& t) {
  const int n = t.order;
  PathFamily out{AnchorScheme{SchemeKind::Pi, n}, {}};
  int i = 0;
  for (const auto& line : tiling_path_polylines(t)) {
    ++i;
    SchroederPath path;
    path.start_x = -2 * i + 1;
    path.steps.assign(i - 1, Step::Up);
    for (std::size_t k = 0; k + 1 < line.size(); ++k) {
      const int dx = line[k + 1].x - line[k].x;
      const int dy = line[k + 1].y - line[k].y;
      path.steps.push_back(dx == 4 ? Step::Level
                                   : (dy > 0 ? Step::Up : Step::Down));
    }
    path.steps.insert(path.steps.end(), i - 1, Step::Down);
    out.paths.push_back(std::move(path));
  }
  return out;
}

Tiling paths_to_tiling(const PathFamily& f) {
  validate_family(f);
  if (f.scheme.kind != SchemeKind::Pi)
    throw DomainError("tilings correspond to Pi families");
  if (!is_nonintersecting(f))
    throw DomainError("tilings correspond to non-intersecting families");
  const int n = f.scheme.n;
  if (n < 1) throw DomainError("tilings exist for n >= 1");
  const CellIndex idx(n);
  std::vector<int> covered_by(idx.cells().size(), -1);
  std::set<Domino> placed;

  auto place = [&](const Domino& d) {
    const auto [it, inserted] = placed.insert(d);
    if (!inserted) return;  // the same domino may carry two crossings
    for (const Cell& c : d.cells()) {
      const int ci = idx.index(c);
      if (ci < 0)
        throw InternalConsistencyError(domino_text(d) + " leaves the region");
      if (covered_by[ci] >= 0)
        throw InternalConsistencyError(domino_text(d) +
                                       " collides with another path domino");
      covered_by[ci] = 1;
    }
  };

  for (int i = 1; i <= n; ++i) {
    const auto& steps = f.paths[i - 1].steps;
    // non-intersection forces the U^{i-1} ... D^{i-1} frame: a shorter climb
    // would land on a vertex the previous path owns
    const std::size_t frame = static_cast<std::size_t>(i - 1);
    if (steps.size() < 2 * frame)
      throw InternalConsistencyError("path too short for its frame");
    for (std::size_t k = 0; k < frame; ++k) {
      if (steps[k] != Step::Up || steps[steps.size() - 1 - k] != Step::Down)
        throw InternalConsistencyError(
            "non-intersecting family lacks the U/D frame");
    }
    Point p{-2 * i, 2 * i - 2 * n - 1};
    for (std::size_t k = frame; k < steps.size() - frame; ++k) {
      const Cell c{p.x / 2, (p.y - 1) / 2};
      switch (steps[k]) {
        case Step::Level:
          place(Domino{c, Orientation::Horizontal});
          p = {p.x + 4, p.y};
          break;
        case Step::Up:
          place(Domino{c, Orientation::Vertical});
          p = {p.x + 2, p.y + 2};
          break;
        case Step::Down:
          place(Domino{Cell{c.x, c.y - 1}, Orientation::Vertical});
          p = {p.x + 2, p.y - 2};
          break;
      }
    }
  }

  // every cell off the paths pairs with its east neighbor; runs of uncovered
  // cells admit exactly one adjacent-pair matching, so a linear scan is it
  const auto& cells = idx.cells();
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    if (covered_by[ci] >= 0) continue;
    const Cell east{cells[ci].x + 1, cells[ci].y};
    const int ei = idx.index(east);
    if (ei < 0 || covered_by[ei] >= 0)
      throw InternalConsistencyError(
          "residual cells do not pair horizontally");
    covered_by[ci] = covered_by[ei] = 1;
    placed.insert(Domino{cells[ci], Orientation::Horizontal});
  }

  Tiling out{n, {placed.begin(), placed.end()}};
  std::sort(out.dominoes.begin(), out.dominoes.end(),
            [](const Domino& a, const Domino& b) {
              return std::tie(a.anchor.y, a.anchor.x, a.orientation) <
                     std::tie(b.anchor.y, b.anchor.x, b.orientation);
            });
  validate_tiling(out);
  return out;
}

}  // namespace aztec
