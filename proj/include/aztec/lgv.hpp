#pragma once

// Non-intersecting path families and the sign-reversing tail-swap involution.
//
// Intersection is defined as sharing a lattice vertex (a step endpoint).
// That captures every geometric meeting for the families handled here: all
// vertices of one family member have the same parity of x + y (each step kind
// preserves it, and the anchors of a scheme agree on it), so the interior
// midpoint of a Level step -- the only non-vertex lattice point on a path --
// has the opposite parity and can never lie on another path of the family.
// Two same-parity paths likewise cannot cross transversally between vertices:
// an Up and a Down step can only cross at half-integer points when their
// sources differ in parity, and overlapping Level steps at one height share
// an endpoint. Vertex-disjointness is therefore the whole story.

#include <compare>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "aztec/bigcount.hpp"
#include "aztec/schroeder.hpp"

namespace aztec {

// Permutation of {1..n}; images stored 0-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // must be a bijection
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  // Precompose with the transposition (i j): swaps the images at i and j.
  Permutation transposed(int i, int j) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

enum class SchemeKind { Pi, Omega, PiStar };

// Anchors for the k-th path of a family, k = 0-based tuple position.
// Pi and Omega: path k runs (-2k-1, 0) -> (2k+1, 0); Omega additionally
// requires every path to be small. PiStar: path k runs (-2k, 0) -> (2k, 0),
// path 0 degenerating to the single point at the origin.
struct AnchorScheme {
  SchemeKind kind = SchemeKind::Pi;
  int n = 0;

  int start_x(int k) const;
  int end_x(int k) const;

  friend bool operator==(const AnchorScheme&, const AnchorScheme&) = default;
};

struct PathFamily {
  AnchorScheme scheme;
  std::vector<SchroederPath> paths;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

// A permutation sigma plus paths where path k runs from A_{k+1} = (-2k-1, 0)
// to B_{sigma(k)+1} = (2 sigma(k)+1, 0).
struct SignedConfiguration {
  Permutation sigma;
  std::vector<SchroederPath> paths;

  friend bool operator==(const SignedConfiguration&,
                         const SignedConfiguration&) = default;
};

// True iff the vertex sets of the paths are pairwise disjoint.
bool is_nonintersecting(const std::vector<SchroederPath>& paths);
bool is_nonintersecting(const PathFamily& f);
bool is_nonintersecting(const SignedConfiguration& c);

// Endpoint/validity/smallness checks against the scheme; throws DomainError
// with the first offending path on failure. Does not check intersection.
void validate_family(const PathFamily& f);
void validate_configuration(const SignedConfiguration& c);

inline constexpr int kDefaultFamilyCutoff = 3;

// All non-intersecting families under the scheme, by pruned backtracking
// (partial paths touching an already-used vertex are cut). Families arrive in
// the canonical order: lexicographic by step strings, path 0 outermost.
// Throws SizeLimitError past the cutoff (see --max-enum-n).
std::vector<PathFamily> enumerate_family(const AnchorScheme& scheme,
                                         int max_n = kDefaultFamilyCutoff);

// The frame bijection: (pi_1..pi_{n-1}) -> (omega_1..omega_n) with
// omega_1 = UD and omega_i = U U pi_{i-1} D D. Input must be a
// non-intersecting Pi family; output is an Omega family.
PathFamily phi(const PathFamily& pi_family);
PathFamily phi_inverse(const PathFamily& omega_family);

// The shift bijection: (pi_1..pi_{n-1}) -> (mu_0..mu_{n-1}) with mu_0 the
// empty path at the origin and mu_i = U pi_i D. Output is a PiStar family.
PathFamily rho(const PathFamily& pi_family);
PathFamily rho_inverse(const PathFamily& pistar_family);

// Lexicographically first pair (i, j), i < j, whose paths share a vertex;
// nullopt when the paths are pairwise disjoint. 0-based indices.
std::optional<std::pair<int, int>> first_intersecting_pair(
    const std::vector<SchroederPath>& paths);

// The sign-reversing involution. Non-intersecting configurations are fixed
// points. Otherwise: let v be the (x, y)-lexicographically last lattice point
// lying on at least two paths and i < j the two smallest indices of paths
// through v; the suffixes after v are exchanged and sigma is composed with
// (i j). Point multiplicities are invariant under the exchange, so v and
// (i, j) are re-selected identically on the image and the map is an
// involution; it flips sgn(sigma) and preserves the first intersecting pair.
SignedConfiguration tail_swap(const SignedConfiguration& c);

inline constexpr int kDefaultSignedCountCutoff = 3;

// Enumerates every configuration (Pi style over large paths, Omega style over
// small paths) and returns the signed count  #{sgn = +1} - #{sgn = -1}.
// Throws SizeLimitError past the cutoff and DomainError for PiStar.
BigCount signed_count(SchemeKind style, int n,
                      int max_n = kDefaultSignedCountCutoff);

// Deterministic sampling for property tests: uniform sigma, then an
// independent uniform choice among all A_{k+1} -> B_{sigma(k)+1} paths for
// each k.
SignedConfiguration sample_configuration(SchemeKind style, int n,
                                         std::mt19937_64& rng);

}  // namespace aztec
