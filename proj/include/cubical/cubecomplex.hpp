#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cubical/pocset.hpp"

namespace cubical {

// Orientation of every hyperplane of a finite pocset, packed as a bitset.
// Bit = 1 means the deep (+) halfspace is chosen.
struct Orientation {
  std::vector<std::uint64_t> words;

  static Orientation zeros(int n) {
    return Orientation{std::vector<std::uint64_t>((n + 63) / 64, 0)};
  }
  bool get(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v) {
    if (v) words[i >> 6] |= (1ull << (i & 63));
    else words[i >> 6] &= ~(1ull << (i & 63));
  }
  Side side(int i) const { return get(i) ? Side::plus : Side::minus; }
  bool operator==(const Orientation&) const = default;
};

struct OrientationHash {
  size_t operator()(const Orientation& o) const {
    size_t h = 1469598103934665603ull;
    for (auto w : o.words) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

// The CAT(0) cube complex dual to a finite pocset: vertices are the
// consistent orientations, edges flip a single hyperplane.
class CubeComplex {
 public:
  // Breadth-first realization from the canonical base vertex. Throws
  // ResourceError past `vertexCap`.
  static CubeComplex realize(const FinitePocset& p, std::size_t vertexCap = 1000000);

  const FinitePocset& pocset() const { return p_; }
  int hyperplanes() const { return p_.size(); }
  std::size_t vertexCount() const { return verts_.size(); }
  const Orientation& vertex(std::size_t v) const { return verts_[v]; }
  std::size_t baseVertex() const { return 0; }
  std::size_t indexOf(const Orientation& o) const;
  bool contains(const Orientation& o) const;

  // Neighbor across hyperplane h, or npos when h is not flippable at v.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t neighbor(std::size_t v, int h) const;
  bool flippable(std::size_t v, int h) const;

  // Hyperplanes separating x from y.
  std::vector<int> separators(std::size_t x, std::size_t y) const;
  std::size_t d1(std::size_t x, std::size_t y) const { return separators(x, y).size(); }

  // Per-hyperplane majority vote.
  std::size_t median(std::size_t x, std::size_t y, std::size_t z) const;
  // Vertices lying on a combinatorial geodesic from x to y.
  std::vector<std::size_t> interval(std::size_t x, std::size_t y) const;
  // Least convex superset of a vertex set.
  std::vector<std::size_t> hull(std::vector<std::size_t> vs) const;
  // Halfspaces containing every vertex of vs: pairs (hyperplane, side).
  std::vector<HalfSpace> convexSignature(const std::vector<std::size_t>& vs) const;

  // Nearest-point projection to the convex subcomplex spanned by `target`
  // (which must be convex). The gate g satisfies, for every hyperplane, the
  // side forced by the target when one exists and the side of x otherwise.
  std::size_t gate(std::size_t x, const std::vector<std::size_t>& target) const;

  // One combinatorial geodesic from x to y, flipping the lexicographically
  // least flippable separator at each step.
  std::vector<std::size_t> geodesic(std::size_t x, std::size_t y) const;

  // Normal cube path from x to y: at each step flip the full set of minimal
  // separators (pairwise transverse). Returns the visited vertices; the
  // per-step cubes are the flipped sets.
  struct NormalPath {
    std::vector<std::size_t> vertices;
    std::vector<std::vector<int>> cubes;
  };
  NormalPath normalCubePath(std::size_t x, std::size_t y) const;

  // Number of k-cubes for k = 0..dim.
  std::vector<std::size_t> cubeCensus() const;
  int dimension() const;

  // Maximal cubes, each as (minimum-corner vertex, transverse hyperplane set).
  struct Cube {
    std::size_t corner;
    std::vector<int> axes;
  };
  std::vector<Cube> maximalCubes() const;

  // Reconstructs the relation table from the vertex set (duality round trip).
  FinitePocset toPocset() const;

 private:
  explicit CubeComplex(const FinitePocset& p) : p_(p) {}

  FinitePocset p_;
  std::vector<Orientation> verts_;
  std::unordered_map<Orientation, std::size_t, OrientationHash> index_;
};

// Greedy lexicographic-least consistent orientation: hyperplanes are visited
// in order and assigned the shallow side whenever the partial choice still
// extends to a consistent orientation (2-SAT feasibility).
Orientation baseOrientation(const FinitePocset& p);

// All consistent orientations by brute force over 2^n, for small n. Used as
// an independent oracle for the flip realization.
std::vector<Orientation> allConsistentOrientations(const FinitePocset& p);

}  // namespace cubical
