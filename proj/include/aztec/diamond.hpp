#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "aztec/bigcount.hpp"
#include "aztec/lgv.hpp"

namespace aztec {

// Unit square with corners (x, y), (x+1, y), (x, y+1), (x+1, y+1). Member of
// the order-n region iff all four corners satisfy |x| + |y| <= n + 1.
struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

bool cell_in_region(const Cell& c, int n);

// The 2n(n+1) cells of the order-n region, sorted by (y, x).
std::vector<Cell> region_cells(int n);

enum class Orientation : std::uint8_t { Horizontal, Vertical };

// Horizontal covers the anchor and its east neighbor, vertical the anchor and
// its north neighbor.
struct Domino {
  Cell anchor;
  Orientation orientation = Orientation::Horizontal;

  std::array<Cell, 2> cells() const;

  friend auto operator<=>(const Domino&, const Domino&) = default;
};

// Dominoes exactly partitioning the cell set of the order-n region, kept in
// canonical order: ascending (anchor.y, anchor.x, orientation).
struct Tiling {
  int order = 0;
  std::vector<Domino> dominoes;

  friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

// Disjointness, exact cover and canonical ordering; throws ValidationError
// naming the first offending domino.
void validate_tiling(const Tiling& t);

inline constexpr int kDefaultTilingCutoff = 5;

// Every tiling exactly once: repeatedly cover the least uncovered cell by
// (y, x), branching horizontal before vertical. Output is in canonical order.
// Throws SizeLimitError past the cutoff (see --max-enum-n).
std::vector<Tiling> enumerate_tilings(int n, int max_n = kDefaultTilingCutoff);

enum class CountMethod { Formula, Determinant, Enumeration };

// Formula: 2^{n(n+1)/2}. Determinant: det of the order-n offset-1 Hankel
// matrix of the large Schroeder numbers. Enumeration: brute-force tiling
// count (subject to the cutoff). The three agree wherever defined.
BigCount count_tilings(int n, CountMethod method,
                       int max_n = kDefaultTilingCutoff);

// The region paths tau_1..tau_n threaded through the tiling: for row i
// (rows 1..2n from the bottom), start at the midpoint of the row's left edge
// and repeatedly jump to the point symmetric about the center of the domino
// being entered. Returned as vertex chains in doubled coordinates (midpoints
// become lattice points): a horizontal domino is a (+4, 0) jump, a vertical
// one (+2, +2) from its lower cell and (+2, -2) from its upper cell.
std::vector<std::vector<Point>> tiling_path_polylines(const Tiling& t);

// The bijection with Pi families: pi_i = U^{i-1} tau_i D^{i-1} re-anchored to
// run (-2i+1, 0) -> (2i-1, 0).
PathFamily tiling_to_paths(const Tiling& t);

// Inverse: strips the U/D frames, lays each tau_i's dominoes along its row
// and fills every remaining cell with horizontal dominoes (the remaining
// runs pair uniquely left to right).
Tiling paths_to_tiling(const PathFamily& f);

}  // namespace aztec
