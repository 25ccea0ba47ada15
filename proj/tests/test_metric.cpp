#include <doctest.h>

#include <cmath>

#include "cubical/document.hpp"
#include "cubical/metric.hpp"

using namespace cubical;

namespace {

Document fixture(const char* name) { return loadDocument(std::string(FIXTURES) + name); }

std::size_t vertexAt(const CubeComplex& x, const std::vector<std::pair<std::string, Side>>& sides) {
  Orientation o = Orientation::zeros(x.hyperplanes());
  for (const auto& [name, side] : sides) {
    auto idx = x.pocset().indexOf(name);
    REQUIRE(idx.has_value());
    o.set(*idx, side == Side::plus);
  }
  REQUIRE(x.contains(o));
  return x.indexOf(o);
}

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("rescaling validation") {
  Document d = fixture("/square.json");
  CubeComplex x = CubeComplex::realize(*d.finite);
  CHECK(validateRescaling(x, {}) == std::pair<double, double>{1.0, 1.0});
  Rescaling mixed;
  mixed.length = {{0, 1.0}, {1, 2.0}};
  CHECK(validateRescaling(x, mixed) == std::pair<double, double>{1.0, 2.0});
  Rescaling bad;
  bad.length = {{0, 0.0}};
  CHECK_THROWS_AS(validateRescaling(x, bad), DomainError);
}

TEST_CASE("diagonal of one square") {
  Document d = fixture("/square.json");
  CubeComplex x = CubeComplex::realize(*d.finite);
  MetricGeometry g(x);
  std::size_t a = vertexAt(x, {{"V0", Side::minus}, {"H0", Side::minus}});
  std::size_t b = vertexAt(x, {{"V0", Side::plus}, {"H0", Side::plus}});
  auto e = g.distance(a, b);
  CHECK(e.distance == doctest::Approx(kSqrt2).epsilon(1e-6));
  CHECK(g.wallLength(a, b) == doctest::Approx(2.0));
  // Adjacent corners are at distance 1.
  std::size_t c = vertexAt(x, {{"V0", Side::plus}, {"H0", Side::minus}});
  CHECK(g.distance(a, c).distance == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("diagonal of the 2x1 rectangle") {
  Document d = fixture("/rect2x1.json");
  CubeComplex x = CubeComplex::realize(*d.finite);
  MetricGeometry g(x);
  std::size_t a = x.baseVertex();
  // Opposite corner: every hyperplane deep.
  Orientation o = Orientation::zeros(x.hyperplanes());
  for (int h = 0; h < x.hyperplanes(); ++h) o.set(h, !x.vertex(a).get(h));
  REQUIRE(x.contains(o));
  auto e = g.distance(a, x.indexOf(o));
  CHECK(e.distance == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
}

TEST_CASE("the L-shaped complex bends its geodesic at the reflex corner") {
  Document d = fixture("/lshape.json");
  CubeComplex x = CubeComplex::realize(*d.finite);
  CHECK(x.vertexCount() == 8);
  MetricGeometry g(x);
  std::size_t a = vertexAt(x, {{"V0", Side::plus},
                               {"V1", Side::plus},
                               {"H0", Side::minus},
                               {"H1", Side::minus}});
  std::size_t b = vertexAt(x, {{"V0", Side::minus},
                               {"V1", Side::minus},
                               {"H0", Side::plus},
                               {"H1", Side::plus}});
  auto e = g.distance(a, b, 1e-4);
  CHECK(e.distance == doctest::Approx(2 * kSqrt2).epsilon(1e-3));
  // The straight diagonal grazes the reflex corner but stays inside the
  // complex, so the segment shortcut certifies the value exactly.
  CHECK(e.exactShortcut);
  CHECK(e.distance > 2.0);

  // Symmetry and triangle inequality across all vertex pairs.
  for (std::size_t u = 0; u < x.vertexCount(); ++u)
    for (std::size_t v = u + 1; v < x.vertexCount(); ++v) {
      double duv = g.distance(u, v, 1e-4).distance;
      CHECK(g.distance(v, u, 1e-4).distance == doctest::Approx(duv).epsilon(1e-6));
      for (std::size_t w = 0; w < x.vertexCount(); ++w) {
        if (w == u || w == v) continue;
        CHECK(duv <= g.distance(u, w, 1e-4).distance + g.distance(w, v, 1e-4).distance + 2e-4);
      }
    }
}

TEST_CASE("wall-count fit on the square") {
  Document d = fixture("/square.json");
  CubeComplex x = CubeComplex::realize(*d.finite);
  MetricGeometry g(x);
  auto fit = g.wallCountCheck();
  CHECK(fit.pairs == 6);
  CHECK(fit.lambda0 == doctest::Approx(kSqrt2).epsilon(1e-4));
  // d <= |W| <= sqrt(dim) d exactly on the square.
  CHECK(fit.maxRatioWallOverMetric <= kSqrt2 + 1e-6);
  CHECK(fit.maxRatioMetricOverWall <= 1.0 + 1e-6);
}

TEST_CASE("wall-count fit on the truncated staircase") {
  Document d = fixture("/stair-lin.json");
  FinitePocset p = d.tiered->truncate(4);
  CubeComplex x = CubeComplex::realize(p);
  CHECK(x.vertexCount() == 15);
  MetricGeometry g(x);
  auto fit = g.wallCountCheck(1e-3);
  CHECK(fit.lambda0 <= kSqrt2 + 0.05);
  CHECK(fit.maxRatioMetricOverWall <= 1.0 + 1e-3);
}

TEST_CASE("rescaled rectangle") {
  Document d = fixture("/rect2x1.json");
  CubeComplex x = CubeComplex::realize(*d.finite);
  // Double the horizontal wall's length.
  Rescaling rho;
  auto h0 = x.pocset().indexOf("H0");
  REQUIRE(h0.has_value());
  rho.length = {{*h0, 2.0}};
  MetricGeometry g(x, rho);
  auto fit = g.wallCountCheck();
  CHECK(fit.lambda0 <= 2 * kSqrt2 + 1e-6);

  // Identity-map bilipschitz bounds against the unit metric.
  MetricGeometry unit(x);
  double lo = 1.0 / kSqrt2, hi = 2.0 * kSqrt2;
  for (std::size_t u = 0; u < x.vertexCount(); ++u)
    for (std::size_t v = u + 1; v < x.vertexCount(); ++v) {
      double r = g.distance(u, v).distance / unit.distance(u, v).distance;
      CHECK(r >= lo - 1e-6);
      CHECK(r <= hi + 1e-6);
    }
}
