#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubical/simplicial.hpp"
#include "cubical/types.hpp"

namespace cubical {

class TieredPocset;

// A cone in R^d (d <= 4) cut out by coordinate comparisons. Several sectors
// may be listed; the cone is their union, and a sector may pin coordinates
// to zero to describe lower-dimensional sheets.
struct ConeConstraint {
  enum class Kind : std::uint8_t { nonneg, ge, zero };  // x_i >= 0, x_i >= x_j, x_i = 0
  Kind kind = Kind::nonneg;
  int i = 0;
  int j = 0;
  auto operator<=>(const ConeConstraint&) const = default;
};

using Vec = std::array<double, 4>;

struct CubicalCone {
  int dim = 0;
  std::vector<std::vector<ConeConstraint>> sectors;

  bool sectorContains(std::size_t s, const Vec& x, double tol = 1e-9) const;
  bool contains(const Vec& x, double tol = 1e-9) const;
};

// A coordinate subset sent to infinity.
using InfinityPattern = std::set<int>;

// A spherical polytope: the unit directions of a polyhedral cone, recorded
// by the cone's extreme rays (unit vectors).
struct SphericalPolytope {
  std::vector<Vec> vertices;
  std::vector<std::size_t> sectorOf;  // sector giving each vertex
  bool empty() const { return vertices.empty(); }
};

double arcDistance(const Vec& a, const Vec& b);

class TitsCone {
 public:
  explicit TitsCone(const CubicalCone& c);

  const CubicalCone& cone() const { return c_; }

  // Admissible infinity patterns: constraint-closed in some sector, realized
  // by actual directions of the cone.
  std::vector<InfinityPattern> patterns() const;

  // Q(v): cone directions with the coordinates outside v pinned to zero.
  SphericalPolytope realization(const InfinityPattern& v) const;

  // Pattern of strictly positive coordinates of a direction; throws when
  // the direction is not in the cone.
  InfinityPattern deepSet(const Vec& dir, double tol = 1e-9) const;

  // Maximal pattern realized inside Q(v): support of the relative-interior
  // centroid.
  InfinityPattern maximalPatternIn(const InfinityPattern& v) const;

  // Is Q(v) nonempty with Q(v) = Q(M_v) and v = M_v (l2 visibility)?
  bool visible(const InfinityPattern& v) const;
  std::vector<InfinityPattern> visiblePatterns() const;
  std::vector<InfinityPattern> maxVisiblePatterns() const;

  double diameter(const SphericalPolytope& q) const;

  // Minimax circumcenter over the polytope vertices by projected subgradient
  // descent; returns (center, radius).
  struct Center {
    Vec point{};
    double radius = 0.0;
  };
  Center circumcenter(const SphericalPolytope& q, int iters = 10000, double tol = 1e-8) const;

  // A point of Q_0(v) = Q(v) minus the realizations of the strictly smaller
  // patterns, within pi/4 - r/2 of the circumcenter.
  Vec pseudocenter(const InfinityPattern& v) const;

  // Do Q(v) and Q(w) share a direction? Exact, via extreme rays of the
  // intersection pattern.
  bool realizationsIntersect(const std::vector<InfinityPattern>& vs) const;

  // Nerve of the closed cover of the Tits boundary by Q(v), v maximal
  // visible.
  SimplicialComplex visibilityNerve() const;

  std::string patternString(const InfinityPattern& v) const;

  // The finitely presented pocset of the cone's cubical complex: one family
  // per coordinate, crossing rules read off the constraints.
  TieredPocset toTiered() const;

 private:
  std::vector<Vec> sectorRays(std::size_t s, const InfinityPattern& zeroOutside) const;

  CubicalCone c_;
};

}  // namespace cubical
