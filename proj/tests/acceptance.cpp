// Acceptance run: eleven end-to-end checks over the bundled fixtures, one
// verdict line each.  argv[1] is the fixtures directory.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cubical/boundaries.hpp"
#include "cubical/cubecomplex.hpp"
#include "cubical/document.hpp"
#include "cubical/metric.hpp"
#include "cubical/titscone.hpp"

using namespace cubical;

namespace {

std::string dir;
int failures = 0;

void criterion(int n, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

Document fx(const std::string& name) { return loadDocument(dir + "/" + name + ".json"); }

int familyOf(const TieredPocset& t, const std::string& name) {
  for (int f = 0; f < t.familyCount(); ++f)
    if (t.familyName(f) == name) return f;
  throw DomainError("no family " + name);
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

const std::vector<std::string> kTiered = {"stair-lin", "stair-sub", "quarterplane",
                                          "weird",     "dominant",  "duo"};
const std::vector<std::string> kCone = {"octant3", "quarterplane-cone", "wedge"};
const std::vector<std::string> kFinite = {"square", "rect2x1", "lshape", "tripod"};

std::string faceLabel(const SimplicialComplex& s, const std::vector<int>& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += s.label(f[i]);
  }
  return out + "}";
}

std::set<std::vector<int>> closeDown(const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> out;
  for (auto f : gens) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    int k = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) sub.push_back(f[i]);
      out.insert(sub);
    }
  }
  return out;
}

// Every bundled pocset with a boundary: the tiered fixtures plus the cone
// imports (name, pocset) pairs.
std::vector<std::pair<std::string, TieredPocset>> allTiered() {
  std::vector<std::pair<std::string, TieredPocset>> out;
  for (const auto& n : kTiered) out.emplace_back(n, *fx(n).tiered);
  for (const auto& n : kCone) out.emplace_back(n, TitsCone(*fx(n).cone).toTiered());
  return out;
}

std::vector<std::pair<std::string, CubeComplex>> allFinite() {
  std::vector<std::pair<std::string, CubeComplex>> out;
  for (const auto& n : kFinite) out.emplace_back(n, CubeComplex::realize(*fx(n).finite));
  out.emplace_back("stair-lin@4", CubeComplex::realize(fx("stair-lin").tiered->truncate(4)));
  out.emplace_back("weird@3", CubeComplex::realize(fx("weird").tiered->truncate(3)));
  return out;
}

bool c1(std::string& detail) {
  Document d = fx("weird");
  Boundaries b(*d.tiered);
  const auto& bd = b.simplicialBoundary();
  if (!(bd.vertexCount() == 3 && bd.maximalFaces().size() == 1 &&
        bd.maximalFaces().begin()->size() == 3)) {
    detail = "boundary is not a single 2-simplex";
    return false;
  }
  std::set<std::set<std::string>> mins;
  for (const auto& m : b.minimalClasses()) {
    std::set<std::string> names;
    for (int f : m.families) names.insert(d.tiered->familyName(f));
    mins.insert(names);
  }
  if (mins != std::set<std::set<std::string>>{{"B"}, {"S"}, {"D"}}) {
    detail = "minimal classes are not {B},{S},{D}";
    return false;
  }
  UBSCalculus calc(*d.tiered);
  UBSWitness w;
  int B = familyOf(*d.tiered, "B"), D = familyOf(*d.tiered, "D");
  if (calc.isUBS(UBSDescriptor::tailsAtZero({B, D}), &w) || w.reason != "separated" ||
      w.hyps.size() != 3) {
    detail = "B-tail + D-tail lacks an inseparability witness";
    return false;
  }
  if (b.ubsComplex().vertexCount() != 6) {
    detail = "UBS complex does not have 6 vertices";
    return false;
  }
  return true;
}

bool c2(std::string& detail) {
  std::vector<std::pair<std::set<std::string>, std::vector<std::string>>> outputs;
  for (const std::string& name : {"stair-lin", "stair-sub"}) {
    Document d = fx(name);
    Boundaries b(*d.tiered);
    RollerCalculus rc(*d.tiered);
    const UBSCalculus& calc = rc.ubs();
    int V = familyOf(*d.tiered, "V"), H = familyOf(*d.tiered, "H");
    UBSClass cv = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V}));
    UBSClass ch = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({H}));
    UBSClass cvh = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V, H}));
    const auto& bd = b.simplicialBoundary();
    if (!(bd.vertexCount() == 2 && bd.maximalFaces().size() == 1 &&
          bd.maximalFaces().begin()->size() == 2)) {
      detail = name + ": boundary is not a single 1-simplex";
      return false;
    }
    if (!(rc.umbra(ch) == rc.umbra(cvh))) {
      detail = name + ": umbra([H]) != umbra([V u H])";
      return false;
    }
    if (!(rc.classUBS(rc.umbra(ch)) == cvh)) {
      detail = name + ": section does not pick [V u H] back out";
      return false;
    }
    if (rc.l1Visible(ch) || !rc.l1Visible(cv) || !rc.l1Visible(cvh)) {
      detail = name + ": l1 visibility pattern is wrong";
      return false;
    }
    std::set<std::string> classes;
    for (const auto& c : b.rollerClasses()) classes.insert(b.roller().fingerprintString(c));
    std::vector<std::string> labels = bd.labels();
    std::sort(labels.begin(), labels.end());
    outputs.emplace_back(classes, labels);
  }
  if (!(outputs[0] == outputs[1])) {
    detail = "stair-sub differs combinatorially from stair-lin";
    return false;
  }
  return true;
}

bool c3(std::string& detail) {
  Document d = fx("dominant");
  UBSCalculus calc(*d.tiered);
  int V = familyOf(*d.tiered, "V"), H = familyOf(*d.tiered, "H");
  UBSClass c = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V, H}));
  auto dom = calc.dominantComponents(c);
  std::set<std::string> names;
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (dom[i])
      for (int f : c.components[i].families) names.insert(d.tiered->familyName(f));
  if (names != std::set<std::string>{"H"}) {
    detail = "dominant components are not exactly {H}";
    return false;
  }
  return c.dimension() == 2;
}

bool c4(std::string& detail) {
  Document d = fx("octant3");
  TitsCone tc(*d.cone);
  TieredPocset t = tc.toTiered();
  Boundaries b(t);
  const auto& classes = b.rollerClasses();
  std::set<std::set<int>> got;
  for (const auto& c : classes) got.insert(c.deep);
  std::set<std::set<int>> want = {{0}, {1}, {0, 1}, {0, 1, 2}};
  if (got != want) {
    detail = "Roller classes do not match the four infinity patterns";
    return false;
  }
  int strict = 0, minimal = 0, maximal = 0;
  for (const auto& a : classes) {
    bool isMin = true, isMax = true;
    for (const auto& o : classes) {
      if (a == o) continue;
      if (rollerLeq(a, o)) {
        ++strict;
        isMax = false;
      }
      if (rollerLeq(o, a)) isMin = false;
    }
    minimal += isMin;
    maximal += isMax;
  }
  if (!(strict == 5 && minimal == 2 && maximal == 1)) {
    detail = "Roller order is not two chains through the top";
    return false;
  }
  SphericalPolytope qf = tc.realization({0, 1, 2});
  SphericalPolytope qb = tc.realization({0, 1});
  const double kPi = std::acos(-1.0);
  if (!near(tc.diameter(qb), kPi / 2, 1e-6)) {
    detail = "base length is not pi/2";
    return false;
  }
  auto cf = tc.circumcenter(qf);
  double inv = 1 / std::sqrt(2.0);
  if (!(near(cf.point[0], inv, 1e-6) && near(cf.point[1], inv, 1e-6) &&
        near(cf.point[2], 0, 1e-6) && near(cf.radius, kPi / 4, 1e-6))) {
    detail = "circumcenter is not (1,1,0)/sqrt(2) with radius pi/4";
    return false;
  }
  double height = 0;
  for (const Vec& v : qf.vertices)
    if (v[0] > 1e-9 && v[1] > 1e-9 && v[2] > 1e-9) height = arcDistance(cf.point, v);
  if (!near(height, std::atan(1 / std::sqrt(2.0)), 1e-6)) {
    detail = "triangle height is not arctan(1/sqrt(2))";
    return false;
  }
  auto cb = tc.circumcenter(qb);
  if (arcDistance(cb.point, cf.point) > 1e-6 || !near(cb.radius, cf.radius, 1e-6)) {
    detail = "Q(base) and Q(full) do not share a circumcenter";
    return false;
  }
  return true;
}

bool c5(std::string& detail) {
  for (const auto& [name, t] : allTiered()) {
    Boundaries b(t);
    auto mc = b.checkMaps();
    if (!(mc.umbraOrderPreserving && mc.sectionOrderPreserving && mc.sectionInjective &&
          mc.roundTripIdentity && mc.fibersConed)) {
      detail = name + ": " + mc.detail;
      return false;
    }
    // Maximal UBS classes and maximal Roller classes correspond under the
    // umbra, bijectively.
    RollerCalculus rc(t);
    std::set<RollerClass> maxRoller, maxUmbras;
    for (const auto& a : b.rollerClasses()) {
      bool isMax = true;
      for (const auto& o : b.rollerClasses())
        if (!(a == o) && rollerLeq(a, o)) isMax = false;
      if (isMax) maxRoller.insert(a);
    }
    for (const auto& a : b.ubsClasses()) {
      bool isMax = true;
      for (const auto& o : b.ubsClasses())
        if (!(a == o) && preceq(a, o)) isMax = false;
      if (isMax) maxUmbras.insert(rc.umbra(a));
    }
    if (maxRoller != maxUmbras) {
      detail = name + ": maximal classes do not biject";
      return false;
    }
  }
  return true;
}

bool c6(std::string& detail) {
  for (const auto& [name, t] : allTiered()) {
    Boundaries b(t);
    for (bool mod2 : {false, true}) {
      auto bs = b.simplicialBoundary().betti(mod2);
      auto br = b.rollerComplex().betti(mod2);
      auto bu = b.ubsComplex().betti(mod2);
      std::size_t n = std::max({bs.size(), br.size(), bu.size()});
      bs.resize(n, 0);
      br.resize(n, 0);
      bu.resize(n, 0);
      if (!(bs == br && bs == bu)) {
        detail = name + ": Betti numbers disagree (mod2=" + std::to_string(mod2) + ")";
        return false;
      }
    }
  }
  for (const auto& name : kCone) {
    Document d = fx(name);
    TitsCone tc(*d.cone);
    TieredPocset t = tc.toTiered();
    Boundaries b(t);
    auto np = b.nervePair();
    for (bool mod2 : {false, true}) {
      auto bs = b.simplicialBoundary().betti(mod2);
      auto bn = tc.visibilityNerve().betti(mod2);
      auto bp = np.nerveMaxSimplices.betti(mod2);
      std::size_t n = std::max({bs.size(), bn.size(), bp.size()});
      bs.resize(n, 0);
      bn.resize(n, 0);
      bp.resize(n, 0);
      if (!(bs == bn && bs == bp)) {
        detail = name + ": nerve Betti numbers disagree with the boundary";
        return false;
      }
    }
  }
  return true;
}

bool c7(std::string& detail) {
  for (const auto& [name, t] : allTiered()) {
    Boundaries b(t);
    auto np = b.nervePair();
    if (!np.isomorphic) {
      detail = name + ": " + np.detail;
      return false;
    }
  }
  return true;
}

bool c8(std::string& detail) {
  std::mt19937_64 rng(20260826);
  for (int trial = 0; trial < 100; ++trial) {
    int nv = 3 + static_cast<int>(rng() % 6);
    std::vector<std::string> labels;
    for (int v = 0; v < nv; ++v) labels.push_back(std::to_string(v));
    SimplicialComplex amb(labels);
    std::vector<std::vector<int>> ambGens;
    int nf = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < nf; ++i) {
      std::vector<int> f;
      for (int v = 0; v < nv; ++v)
        if (rng() % 2) f.push_back(v);
      if (f.empty()) f.push_back(static_cast<int>(rng() % nv));
      amb.addFace(f);
      ambGens.push_back(f);
    }
    int np = 2 + static_cast<int>(rng() % 3);
    std::vector<std::set<std::vector<int>>> sigmas;
    for (int p = 0; p < np; ++p) {
      std::vector<std::vector<int>> gens;
      for (const auto& g : ambGens) {
        std::vector<int> sub;
        for (int v : g)
          if (rng() % 2) sub.push_back(v);
        if (!sub.empty() && rng() % 2) gens.push_back(sub);
      }
      if (gens.empty()) gens.push_back({ambGens[0][0]});
      sigmas.push_back(closeDown(gens));
    }
    if (closedPiecesIntersect(sigmas) != openComplementsIntersect(amb, sigmas)) {
      detail = "law fails on trial " + std::to_string(trial);
      return false;
    }
    // Fullness in the subdivision: the piece's barycenters and the
    // complementary complex partition the vertices of the subdivision, and
    // every maximal chain splits into a face of each side.
    SimplicialComplex bary = barycentric(amb);
    for (const auto& sigma : sigmas) {
      std::set<int> inPiece;
      auto byDim = amb.facesByDim();
      for (const auto& faces : byDim)
        for (const auto& f : faces)
          if (sigma.count(f)) inPiece.insert(*bary.vertexByLabel(faceLabel(amb, f)));
      SimplicialComplex piece = bary.fullSubcomplex(inPiece);
      SimplicialComplex comp = complementaryComplex(amb, sigma);
      if (static_cast<int>(inPiece.size()) + comp.vertexCount() != bary.vertexCount()) {
        detail = "subdivision vertices are not partitioned";
        return false;
      }
      for (const auto& chain : bary.maximalFaces()) {
        std::vector<int> inside, outside;
        for (int v : chain)
          (inPiece.count(v) ? inside : outside).push_back(v);
        if (!inside.empty()) {
          std::vector<int> face;
          for (int v : inside) face.push_back(*piece.vertexByLabel(bary.label(v)));
          if (!piece.hasFace(face)) {
            detail = "piece is not full in the subdivision";
            return false;
          }
        }
        if (!outside.empty()) {
          std::vector<int> face;
          for (int v : outside) face.push_back(*comp.vertexByLabel(bary.label(v)));
          if (!comp.hasFace(face)) {
            detail = "complement is not full in the subdivision";
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool c9(std::string& detail) {
  for (const auto& [name, x] : allFinite()) {
    std::mt19937_64 rng(20260826);
    auto rv = [&] { return static_cast<std::size_t>(rng() % x.vertexCount()); };
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t a = rv(), b = rv(), c = rv();
      std::size_t m = x.median(a, b, c);
      if (m != x.median(b, c, a) || m != x.median(c, a, b) || x.median(a, a, b) != a ||
          x.d1(a, m) + x.d1(m, b) != x.d1(a, b) || x.d1(b, m) + x.d1(m, c) != x.d1(b, c) ||
          x.d1(a, m) + x.d1(m, c) != x.d1(a, c)) {
        detail = name + ": median axiom failure";
        return false;
      }
      auto target = x.interval(rv(), rv());
      std::size_t p = rv(), q = rv();
      std::size_t gp = x.gate(p, target), gq = x.gate(q, target);
      // Wall identity W(p, gate) = W(p, C): the separators of (p, gate) are
      // exactly those separating p from every point of the target.
      auto sep = x.separators(p, gp);
      std::set<int> want;
      for (int h = 0; h < x.hyperplanes(); ++h) {
        bool all = true;
        for (std::size_t t : target) {
          auto s = x.separators(p, t);
          if (std::find(s.begin(), s.end(), h) == s.end()) all = false;
        }
        if (all) want.insert(h);
      }
      if (std::set<int>(sep.begin(), sep.end()) != want) {
        detail = name + ": gate wall identity failure";
        return false;
      }
      // Gate-median identity: the gate is between p and every target point.
      for (std::size_t t : target)
        if (x.median(p, gp, t) != gp) {
          detail = name + ": gate-median identity failure";
          return false;
        }
      if (x.d1(gp, gq) > x.d1(p, q)) {
        detail = name + ": gate is not 1-lipschitz";
        return false;
      }
      // Bridge wall identity: the two gates between two convex sets are
      // separated by exactly the walls separating the sets.
      auto other = x.interval(rv(), rv());
      std::size_t g2 = x.gate(target[0], other);
      std::size_t g1 = x.gate(g2, target);
      g2 = x.gate(g1, other);
      std::set<int> bridge;
      for (int h = 0; h < x.hyperplanes(); ++h) {
        bool all = true;
        for (std::size_t u : target)
          for (std::size_t v : other) {
            auto s = x.separators(u, v);
            if (std::find(s.begin(), s.end(), h) == s.end()) all = false;
          }
        if (all) bridge.insert(h);
      }
      auto sb = x.separators(g1, g2);
      if (std::set<int>(sb.begin(), sb.end()) != bridge) {
        detail = name + ": bridge wall identity failure";
        return false;
      }
    }
  }
  return true;
}

bool c10(std::string& detail) {
  {
    CubeComplex sq = CubeComplex::realize(*fx("square").finite);
    MetricGeometry g(sq);
    if (!near(g.distance(0, sq.vertexCount() - 1).distance, std::sqrt(2.0), 1e-6)) {
      detail = "unit square diagonal is not sqrt(2)";
      return false;
    }
  }
  {
    CubeComplex r = CubeComplex::realize(*fx("rect2x1").finite);
    MetricGeometry g(r);
    double best = 0;
    for (std::size_t a = 0; a < r.vertexCount(); ++a)
      for (std::size_t b = a + 1; b < r.vertexCount(); ++b)
        best = std::max(best, g.distance(a, b).distance);
    if (!near(best, std::sqrt(5.0), 1e-6)) {
      detail = "2x1 rectangle diagonal is not sqrt(5)";
      return false;
    }
  }
  {
    CubeComplex l = CubeComplex::realize(*fx("lshape").finite);
    MetricGeometry g(l);
    double best = 0;
    for (std::size_t a = 0; a < l.vertexCount(); ++a)
      for (std::size_t b = a + 1; b < l.vertexCount(); ++b)
        best = std::max(best, g.distance(a, b, 1e-4).distance);
    if (!near(best, 2 * std::sqrt(2.0), 1e-3)) {
      detail = "L-shape corner distance is not 2*sqrt(2)";
      return false;
    }
  }
  for (const std::string& name : kFinite) {
    CubeComplex x = CubeComplex::realize(*fx(name).finite);
    std::vector<Rescaling> rhos(3);
    rhos[1].length[0] = 2.0;
    for (int h = 0; h < x.hyperplanes(); ++h) rhos[2].length[h] = 1.0 + 0.25 * (h % 3);
    for (const Rescaling& rho : rhos) {
      validateRescaling(x, rho);
      MetricGeometry g(x, rho);
      auto fit = g.wallCountCheck(1e-4);
      double cap = std::sqrt(static_cast<double>(g.coordinates()));
      if (fit.pairs == 0 || fit.maxRatioMetricOverWall > 1 + 1e-6 ||
          fit.maxRatioWallOverMetric > cap + 1e-6 || fit.lambda0 <= 0) {
        detail = name + ": wall count is not bilipschitz to the metric";
        return false;
      }
    }
  }
  return true;
}

bool c11(std::string& detail) {
  for (const auto& [name, x] : allFinite()) {
    FinitePocset back = x.toPocset();
    const FinitePocset& orig = x.pocset();
    if (back.size() != orig.size()) {
      detail = name + ": round trip changes the hyperplane count";
      return false;
    }
    for (int a = 0; a < back.size(); ++a) {
      if (back.name(a) != orig.name(a)) {
        detail = name + ": round trip changes hyperplane names";
        return false;
      }
      for (int b = 0; b < back.size(); ++b)
        if (a != b && !(back.rel(a, b) == orig.rel(a, b))) {
          detail = name + ": round trip changes a relation";
          return false;
        }
    }
    std::mt19937_64 rng(20260826);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t a = rng() % x.vertexCount(), b = rng() % x.vertexCount();
      auto np = x.normalCubePath(a, b);
      std::multiset<int> crossed;
      for (const auto& cube : np.cubes) crossed.insert(cube.begin(), cube.end());
      auto sep = x.separators(a, b);
      if (crossed != std::multiset<int>(sep.begin(), sep.end()) ||
          np.vertices.size() != np.cubes.size() + 1 || np.vertices.front() != a ||
          np.vertices.back() != b) {
        detail = name + ": normal path does not cross each hyperplane once";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <fixtures-dir>\n";
    return 2;
  }
  dir = argv[1];
  criterion(1, "the weird fixture's boundary, minimal classes, witness, and UBS complex", c1);
  criterion(2, "both staircases: umbra collapse, section, and l1 visibility", c2);
  criterion(3, "the horizontal component dominates on the dominance fixture", c3);
  criterion(4, "octant cone classes, triangle measurements, and shared circumcenter", c4);
  criterion(5, "umbra/section correspondence on every bundled pocset", c5);
  criterion(6, "Betti agreement of the three boundary models (and cone nerves)", c6);
  criterion(7, "the two nerves are isomorphic on every bundled pocset", c7);
  criterion(8, "same-nerve law and fullness on 100 random covers", c8);
  criterion(9, "median and gate algebra on random instances", c9);
  criterion(10, "Euclidean distances and wall-count bilipschitz fits", c10);
  criterion(11, "duality round trip and normal cube path crossings", c11);
  return failures == 0 ? 0 : 1;
}
