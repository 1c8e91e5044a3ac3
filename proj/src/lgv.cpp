#include "aztec/lgv.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "aztec/errors.hpp"

namespace aztec {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v])
      throw DomainError("permutation images must be a bijection on 0..n-1");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Permutation(std::move(ids));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::inversions() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

Permutation Permutation::transposed(int i, int j) const {
  std::vector<int> images = images_;
  std::swap(images.at(i), images.at(j));
  return Permutation(std::move(images));
}

int AnchorScheme::start_x(int k) const {
  return kind == SchemeKind::PiStar ? -2 * k : -2 * k - 1;
}

int AnchorScheme::end_x(int k) const { return -start_x(k); }

namespace {

struct PointHash {
  std::size_t operator()(const Point& p) const {
    return std::hash<long long>()((static_cast<long long>(p.x) << 32) ^
                                  static_cast<unsigned int>(p.y));
  }
};

using VertexSet = std::unordered_set<Point, PointHash>;

}  // namespace

bool is_nonintersecting(const std::vector<SchroederPath>& paths) {
  VertexSet seen;
  for (const SchroederPath& p : paths) {
    for (const Point& v : p.vertices()) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

bool is_nonintersecting(const PathFamily& f) {
  return is_nonintersecting(f.paths);
}

bool is_nonintersecting(const SignedConfiguration& c) {
  return is_nonintersecting(c.paths);
}

void validate_family(const PathFamily& f) {
  if (f.scheme.n < 0) throw DomainError("family size must be non-negative");
  if (static_cast<int>(f.paths.size()) != f.scheme.n)
    throw DomainError("family holds " + std::to_string(f.paths.size()) +
                      " paths, scheme expects " + std::to_string(f.scheme.n));
  for (int k = 0; k < f.scheme.n; ++k) {
    const SchroederPath& p = f.paths[k];
    if (!p.is_valid())
      throw DomainError("path " + std::to_string(k) +
                        " dips below the axis or ends off it");
    if (p.start_x != f.scheme.start_x(k) || p.end_x() != f.scheme.end_x(k))
      throw DomainError("path " + std::to_string(k) +
                        " does not join the scheme anchors");
    if (f.scheme.kind == SchemeKind::Omega && !p.is_small())
      throw DomainError("path " + std::to_string(k) +
                        " has a level step on the axis in an Omega family");
  }
}

void validate_configuration(const SignedConfiguration& c) {
  const int n = c.sigma.size();
  if (static_cast<int>(c.paths.size()) != n)
    throw DomainError("configuration path count does not match sigma");
  for (int k = 0; k < n; ++k) {
    const SchroederPath& p = c.paths[k];
    if (!p.is_valid())
      throw DomainError("path " + std::to_string(k) +
                        " dips below the axis or ends off it");
    if (p.start_x != -2 * k - 1 || p.end_x() != 2 * c.sigma(k) + 1)
      throw DomainError("path " + std::to_string(k) +
                        " does not run A_i -> B_sigma(i)");
  }
}

std::vector<PathFamily> enumerate_family(const AnchorScheme& scheme, int max_n) {
  if (scheme.n < 0) throw DomainError("family size must be non-negative");
  if (scheme.n > max_n) {
    throw SizeLimitError("family enumeration is limited to n <= " +
                         std::to_string(max_n) +
                         "; raise --max-enum-n to go further");
  }
  const bool small_only = scheme.kind == SchemeKind::Omega;
  std::vector<PathFamily> out;
  std::vector<SchroederPath> current;
  VertexSet used;
  auto avoid = [&used](const Point& p) { return used.contains(p); };

  auto extend = [&](auto&& self, int k) -> void {
    if (k == scheme.n) {
      out.push_back(PathFamily{scheme, current});
      return;
    }
    for_each_path(scheme.start_x(k), scheme.end_x(k), small_only,
                  [&](const SchroederPath& p) {
                    const auto vs = p.vertices();
                    used.insert(vs.begin(), vs.end());
                    current.push_back(p);
                    self(self, k + 1);
                    current.pop_back();
                    for (const Point& v : vs) used.erase(v);
                  },
                  avoid);
  };
  extend(extend, 0);
  return out;
}

PathFamily phi(const PathFamily& pi_family) {
  validate_family(pi_family);
  if (pi_family.scheme.kind != SchemeKind::Pi)
    throw DomainError("phi expects a Pi family");
  if (!is_nonintersecting(pi_family))
    throw DomainError("phi expects a non-intersecting family");
  const int n = pi_family.scheme.n + 1;
  PathFamily out{AnchorScheme{SchemeKind::Omega, n}, {}};
  out.paths.push_back(SchroederPath::from_steps(-1, "UD"));
  for (int k = 1; k < n; ++k) {
    const SchroederPath& pi = pi_family.paths[k - 1];
    SchroederPath omega;
    omega.start_x = -2 * k - 1;
    omega.steps.reserve(pi.steps.size() + 4);
    omega.steps.insert(omega.steps.end(), 2, Step::Up);
    omega.steps.insert(omega.steps.end(), pi.steps.begin(), pi.steps.end());
    omega.steps.insert(omega.steps.end(), 2, Step::Down);
    out.paths.push_back(std::move(omega));
  }
  return out;
}

PathFamily phi_inverse(const PathFamily& omega_family) {
  validate_family(omega_family);
  if (omega_family.scheme.kind != SchemeKind::Omega)
    throw DomainError("phi_inverse expects an Omega family");
  if (!is_nonintersecting(omega_family))
    throw DomainError("phi_inverse expects a non-intersecting family");
  const int n = omega_family.scheme.n;
  if (n < 1 || omega_family.paths[0].step_string() != "UD")
    throw DomainError("phi image must start with the path UD");
  PathFamily out{AnchorScheme{SchemeKind::Pi, n - 1}, {}};
  for (int k = 1; k < n; ++k) {
    const SchroederPath& omega = omega_family.paths[k];
    const auto& s = omega.steps;
    if (s.size() < 4 || s[0] != Step::Up || s[1] != Step::Up ||
        s[s.size() - 1] != Step::Down || s[s.size() - 2] != Step::Down) {
      throw DomainError("path " + std::to_string(k) +
                        " lacks the UU...DD frame phi adds");
    }
    SchroederPath pi;
    pi.start_x = -2 * k + 1;
    pi.steps.assign(s.begin() + 2, s.end() - 2);
    out.paths.push_back(std::move(pi));
  }
  return out;
}

PathFamily rho(const PathFamily& pi_family) {
  validate_family(pi_family);
  if (pi_family.scheme.kind != SchemeKind::Pi)
    throw DomainError("rho expects a Pi family");
  if (!is_nonintersecting(pi_family))
    throw DomainError("rho expects a non-intersecting family");
  const int n = pi_family.scheme.n + 1;
  PathFamily out{AnchorScheme{SchemeKind::PiStar, n}, {}};
  out.paths.push_back(SchroederPath{0, {}});  // the origin
  for (int k = 1; k < n; ++k) {
    const SchroederPath& pi = pi_family.paths[k - 1];
    SchroederPath mu;
    mu.start_x = -2 * k;
    mu.steps.reserve(pi.steps.size() + 2);
    mu.steps.push_back(Step::Up);
    mu.steps.insert(mu.steps.end(), pi.steps.begin(), pi.steps.end());
    mu.steps.push_back(Step::Down);
    out.paths.push_back(std::move(mu));
  }
  return out;
}

PathFamily rho_inverse(const PathFamily& pistar_family) {
  validate_family(pistar_family);
  if (pistar_family.scheme.kind != SchemeKind::PiStar)
    throw DomainError("rho_inverse expects a PiStar family");
  if (!is_nonintersecting(pistar_family))
    throw DomainError("rho_inverse expects a non-intersecting family");
  const int n = pistar_family.scheme.n;
  if (n < 1 || !pistar_family.paths[0].steps.empty())
    throw DomainError("rho image must start with the empty path");
  PathFamily out{AnchorScheme{SchemeKind::Pi, n - 1}, {}};
  for (int k = 1; k < n; ++k) {
    const SchroederPath& mu = pistar_family.paths[k];
    const auto& s = mu.steps;
    if (s.size() < 2 || s.front() != Step::Up || s.back() != Step::Down) {
      throw DomainError("path " + std::to_string(k) +
                        " lacks the U...D frame rho adds");
    }
    SchroederPath pi;
    pi.start_x = -2 * k + 1;
    pi.steps.assign(s.begin() + 1, s.end() - 1);
    out.paths.push_back(std::move(pi));
  }
  return out;
}

std::optional<std::pair<int, int>> first_intersecting_pair(
    const std::vector<SchroederPath>& paths) {
  const int n = static_cast<int>(paths.size());
  std::vector<std::vector<Point>> vs;
  vs.reserve(n);
  for (const SchroederPath& p : paths) {
    auto v = p.vertices();
    std::sort(v.begin(), v.end());
    vs.push_back(std::move(v));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool hit = std::ranges::any_of(vs[i], [&](const Point& p) {
        return std::binary_search(vs[j].begin(), vs[j].end(), p);
      });
      if (hit) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

SignedConfiguration tail_swap(const SignedConfiguration& c) {
  validate_configuration(c);
  const int n = c.sigma.size();
  std::vector<std::vector<Point>> vs;
  vs.reserve(n);
  for (const SchroederPath& p : c.paths) vs.push_back(p.vertices());

  // point -> indices of the paths through it, ascending by construction
  std::map<Point, std::vector<int>> cover;
  for (int k = 0; k < n; ++k)
    for (const Point& v : vs[k]) cover[v].push_back(k);

  for (auto it = cover.rbegin(); it != cover.rend(); ++it) {
    if (it->second.size() < 2) continue;
    const Point v = it->first;
    const int i = it->second[0];
    const int j = it->second[1];
    // position of v along each path = number of steps consumed before v
    const auto pos = [&](int k) {
      return static_cast<std::size_t>(
          std::find(vs[k].begin(), vs[k].end(), v) - vs[k].begin());
    };
    const std::size_t pi = pos(i);
    const std::size_t pj = pos(j);
    SignedConfiguration swapped{c.sigma.transposed(i, j), c.paths};
    auto& si = swapped.paths[i].steps;
    auto& sj = swapped.paths[j].steps;
    si.assign(c.paths[i].steps.begin(), c.paths[i].steps.begin() + pi);
    si.insert(si.end(), c.paths[j].steps.begin() + pj, c.paths[j].steps.end());
    sj.assign(c.paths[j].steps.begin(), c.paths[j].steps.begin() + pj);
    sj.insert(sj.end(), c.paths[i].steps.begin() + pi, c.paths[i].steps.end());
    return swapped;
  }
  return c;  // pairwise disjoint: fixed point
}

namespace {

// step strings of all width-2m paths from 0, by smallness; shared cache so
// sampling and signed counting do not re-enumerate per call
const std::vector<std::string>& cached_paths(int m, bool small_only) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::vector<std::string>> cache;
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.try_emplace({m, small_only});
  if (inserted) {
    for_each_path(0, 2 * m, small_only, [&](const SchroederPath& p) {
      it->second.push_back(p.step_string());
    });
  }
  return it->second;
}

void check_style(SchemeKind style) {
  if (style == SchemeKind::PiStar)
    throw DomainError("signed configurations are defined for Pi and Omega "
                      "anchor styles only");
}

}  // namespace

BigCount signed_count(SchemeKind style, int n, int max_n) {
  check_style(style);
  if (n < 1) throw DomainError("signed counts are defined for n >= 1");
  if (n > max_n) {
    throw SizeLimitError("signed counting enumerates the full configuration "
                         "space and is limited to n <= " +
                         std::to_string(max_n));
  }
  const bool small_only = style == SchemeKind::Omega;
  BigCount total = 0;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    const int sgn = Permutation(sigma).sign();
    // walk the full cartesian product of path choices with an odometer
    std::vector<std::size_t> sizes(n), index(n, 0);
    bool empty = false;
    for (int k = 0; k < n; ++k) {
      sizes[k] = cached_paths(k + sigma[k] + 1, small_only).size();
      if (sizes[k] == 0) empty = true;
    }
    if (empty) continue;
    while (true) {
      total += sgn;
      int k = n - 1;
      while (k >= 0 && ++index[k] == sizes[k]) index[k--] = 0;
      if (k < 0) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

SignedConfiguration sample_configuration(SchemeKind style, int n,
                                         std::mt19937_64& rng) {
  check_style(style);
  if (n < 1) throw DomainError("configurations need n >= 1");
  const bool small_only = style == SchemeKind::Omega;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  SignedConfiguration c{Permutation(images), {}};
  c.paths.reserve(n);
  for (int k = 0; k < n; ++k) {
    const auto& pool = cached_paths(k + images[k] + 1, small_only);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    c.paths.push_back(SchroederPath::from_steps(-2 * k - 1, pool[pick(rng)]));
  }
  return c;
}

}  // namespace aztec
