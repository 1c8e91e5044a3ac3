#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "aztec/bigcount.hpp"

namespace aztec {

// The three step kinds: Up = (1,1), Down = (1,-1), Level = (2,0).
// Declaration order is the enumeration order used everywhere (U < L < D), so
// the default comparison doubles as the documented lexicographic step order.
enum class Step : std::uint8_t { Up, Level, Down };

constexpr int step_dx(Step s) { return s == Step::Level ? 2 : 1; }
constexpr int step_dy(Step s) {
  return s == Step::Up ? 1 : (s == Step::Down ? -1 : 0);
}

char step_char(Step s);
Step step_from_char(char c);  // throws ValidationError on anything but U/D/L

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// A lattice path of Up/Down/Level steps starting at (start_x, 0). A valid
// path never dips below the x-axis and ends back on it; the width-0 path
// (no steps) is valid and degenerates to a single point.
struct SchroederPath {
  int start_x = 0;
  std::vector<Step> steps;

  int end_x() const;
  int width() const { return end_x() - start_x; }

  // Height >= 0 after every step and == 0 at the end.
  bool is_valid() const;

  // No Level step taken while the running height is 0.
  bool is_small() const;

  // Step endpoints, both ends included. Abscissae are strictly increasing
  // along the path, so each abscissa is visited at most once.
  std::vector<Point> vertices() const;

  std::string step_string() const;
  static SchroederPath from_steps(int start_x, std::string_view s);

  friend bool operator==(const SchroederPath&, const SchroederPath&) = default;
};

// Large Schroeder number r_n, by the first-return convolution
// r_0 = 1, r_{n+1} = r_n + sum_{k=0..n} r_k r_{n-k}.
BigCount large_schroeder(int n);

// Small Schroeder number s_n: s_0 = 1, s_n = r_n / 2 for n >= 1.
BigCount small_schroeder(int n);

// First `count` terms r_0..r_{count-1} (resp. s_0..s_{count-1}).
std::vector<BigCount> large_schroeder_sequence(int count);
std::vector<BigCount> small_schroeder_sequence(int count);

// Streams every valid path from (start_x, 0) to (end_x, 0) in lexicographic
// step order U < L < D. When `avoid` is set, any partial path touching a
// vertex with avoid(p) == true is pruned (the start vertex included); the
// same object is passed to `emit` each time, mutated in place.
// Throws InvalidSpanError when end_x - start_x is negative or odd.
void for_each_path(int start_x, int end_x, bool small_only,
                   const std::function<void(const SchroederPath&)>& emit,
                   const std::function<bool(const Point&)>& avoid = {});

// Materialized form of the above.
std::vector<SchroederPath> enumerate_paths(int start_x, int end_x,
                                           bool small_only = false);

// Number of large Schroeder paths from A_i = (-2i+1, 0) to B_j = (2j-1, 0),
// i, j >= 1, counted by dynamic programming over lattice points. Equals
// r_{i+j-1}; the equality is a library invariant checked by the verification
// suites, not assumed here.
BigCount count_paths_between(int i, int j);

}  // namespace aztec
