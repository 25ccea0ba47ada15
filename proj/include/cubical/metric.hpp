#pragma once

#include <map>
#include <vector>

#include "cubical/cubecomplex.hpp"

namespace cubical {

// Positive edge-length assignment per hyperplane.
struct Rescaling {
  std::map<int, double> length;  // hyperplane row -> length, default 1
  double at(int h) const {
    auto it = length.find(h);
    return it == length.end() ? 1.0 : it->second;
  }
};

// Checks positivity and reports the extremal lengths (m, M).
std::pair<double, double> validateRescaling(const CubeComplex& x, const Rescaling& rho);

// Euclidean geometry of a finite cube complex: the complex is embedded in
// R^c by partitioning the hyperplanes into nesting chains (one coordinate
// per chain), sending maximal cubes to axis boxes.
class MetricGeometry {
 public:
  explicit MetricGeometry(const CubeComplex& x, Rescaling rho = {});

  int coordinates() const { return chains_; }
  std::vector<double> embed(std::size_t v) const;

  struct Estimate {
    double distance = 0;       // refined estimate
    double gridEstimate = 0;   // last grid value (upper bound)
    int levels = 0;
    bool exactShortcut = false;  // straight segment inside the complex
  };
  // Geodesic distance between vertices, by grid search plus touring
  // refinement along the cell sequence.
  Estimate distance(std::size_t a, std::size_t b, double tol = 1e-6, int levelCap = 8) const;

  // Weighted wall count between vertices.
  double wallLength(std::size_t a, std::size_t b) const;

  struct WallFit {
    double lambda0 = 1;  // least multiplicative constant, additive term zero
    double maxRatioWallOverMetric = 0;
    double maxRatioMetricOverWall = 0;
    std::size_t pairs = 0;
  };
  // Fit of the wall count against the Euclidean metric over all vertex
  // pairs (or a sample cap).
  WallFit wallCountCheck(double tol = 1e-4, std::size_t pairCap = 4000) const;

 private:
  struct Box {
    std::vector<double> lo, hi;
  };
  bool segmentInside(const std::vector<double>& a, const std::vector<double>& b) const;
  bool pointInBox(const std::vector<double>& p, const Box& box, double tol) const;

  const CubeComplex& x_;
  Rescaling rho_;
  int chains_ = 0;
  std::vector<int> chainOf_;       // hyperplane -> coordinate
  std::vector<Side> dir_;          // side counted as "increasing" on the coordinate
  std::vector<double> offset_;     // hyperplane -> lower coordinate of its slab
  std::vector<Box> boxes_;
};

}  // namespace cubical
