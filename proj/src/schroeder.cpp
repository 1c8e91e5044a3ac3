#include "aztec/schroeder.hpp"

#include <array>
#include <stdexcept>

#include "aztec/errors.hpp"

namespace aztec {

char step_char(Step s) {
  switch (s) {
    case Step::Up: return 'U';
    case Step::Level: return 'L';
    case Step::Down: return 'D';
  }
  throw InternalConsistencyError("unknown step kind");
}

Step step_from_char(char c) {
  switch (c) {
    case 'U': return Step::Up;
    case 'L': return Step::Level;
    case 'D': return Step::Down;
  }
  throw ValidationError(std::string("invalid step character '") + c +
                        "', expected U, D or L");
}

int SchroederPath::end_x() const {
  int x = start_x;
  for (Step s : steps) x += step_dx(s);
  return x;
}

bool SchroederPath::is_valid() const {
  int y = 0;
  for (Step s : steps) {
    y += step_dy(s);
    if (y < 0) return false;
  }
  return y == 0;
}

bool SchroederPath::is_small() const {
  int y = 0;
  for (Step s : steps) {
    if (s == Step::Level && y == 0) return false;
    y += step_dy(s);
  }
  return true;
}

std::vector<Point> SchroederPath::vertices() const {
  std::vector<Point> vs;
  vs.reserve(steps.size() + 1);
  int x = start_x, y = 0;
  vs.push_back({x, y});
  for (Step s : steps) {
    x += step_dx(s);
    y += step_dy(s);
    vs.push_back({x, y});
  }
  return vs;
}

std::string SchroederPath::step_string() const {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(step_char(s));
  return out;
}

SchroederPath SchroederPath::from_steps(int start_x, std::string_view s) {
  SchroederPath p;
  p.start_x = start_x;
  p.steps.reserve(s.size());
  for (char c : s) p.steps.push_back(step_from_char(c));
  return p;
}

std::vector<BigCount> large_schroeder_sequence(int count) {
  if (count < 0) throw DomainError("sequence length must be non-negative");
  std::vector<BigCount> r;
  r.reserve(count);
  if (count == 0) return r;
  r.push_back(1);
  for (int n = 0; n + 1 < count; ++n) {
    BigCount next = r[n];
    for (int k = 0; k <= n; ++k) next += r[k] * r[n - k];
    r.push_back(next);
  }
  return r;
}

std::vector<BigCount> small_schroeder_sequence(int count) {
  std::vector<BigCount> s = large_schroeder_sequence(count);
  for (std::size_t n = 1; n < s.size(); ++n) s[n] /= 2;  // r_n is even for n >= 1
  return s;
}

BigCount large_schroeder(int n) {
  if (n < 0) throw DomainError("Schroeder index must be non-negative");
  return large_schroeder_sequence(n + 1).back();
}

BigCount small_schroeder(int n) {
  if (n < 0) throw DomainError("Schroeder index must be non-negative");
  if (n == 0) return 1;
  return large_schroeder(n) / 2;
}

namespace {

struct PathGenerator {
  int end_x;
  bool small_only;
  const std::function<void(const SchroederPath&)>& emit;
  const std::function<bool(const Point&)>& avoid;
  SchroederPath path;  // reused buffer, mutated in place

  void run(int x, int y) {
    if (x == end_x && y == 0) {
      emit(path);
      return;  // every step moves right, nothing can follow
    }
    // A step landing on (nx, ny) stays feasible iff ny >= 0 and the
    // remaining width can absorb the descent: ny <= end_x - nx.
    static constexpr std::array<Step, 3> kOrder = {Step::Up, Step::Level,
                                                   Step::Down};
    for (Step s : kOrder) {
      if (small_only && s == Step::Level && y == 0) continue;
      const int nx = x + step_dx(s);
      const int ny = y + step_dy(s);
      if (ny < 0 || ny > end_x - nx) continue;
      if (avoid && avoid(Point{nx, ny})) continue;
      path.steps.push_back(s);
      run(nx, ny);
      path.steps.pop_back();
    }
  }
};

}  // namespace

void for_each_path(int start_x, int end_x, bool small_only,
                   const std::function<void(const SchroederPath&)>& emit,
                   const std::function<bool(const Point&)>& avoid) {
  const int width = end_x - start_x;
  if (width < 0 || width % 2 != 0) {
    throw InvalidSpanError("path span must be a non-negative even width, got " +
                           std::to_string(width));
  }
  if (avoid && avoid(Point{start_x, 0})) return;
  PathGenerator gen{end_x, small_only, emit, avoid, SchroederPath{start_x, {}}};
  gen.run(start_x, 0);
}

std::vector<SchroederPath> enumerate_paths(int start_x, int end_x,
                                           bool small_only) {
  std::vector<SchroederPath> out;
  for_each_path(start_x, end_x, small_only,
                [&](const SchroederPath& p) { out.push_back(p); });
  return out;
}

BigCount count_paths_between(int i, int j) {
  if (i < 1 || j < 1) throw DomainError("path endpoints need i, j >= 1");
  const int width = (2 * j - 1) - (-2 * i + 1);
  // counts[x][y]: paths from the start to the point x units right at height y
  std::vector<std::vector<BigCount>> counts(
      width + 1, std::vector<BigCount>(width / 2 + 2, 0));
  counts[0][0] = 1;
  for (int x = 0; x < width; ++x) {
    for (int y = 0; y <= x && y <= width - x; ++y) {
      const BigCount& c = counts[x][y];
      if (c == 0) continue;
      counts[x + 1][y + 1] += c;
      if (y > 0) counts[x + 1][y - 1] += c;
      if (x + 2 <= width) counts[x + 2][y] += c;
    }
  }
  return counts[width][0];
}

}  // namespace aztec
