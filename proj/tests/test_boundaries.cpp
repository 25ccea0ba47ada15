#include <doctest.h>

#include <algorithm>

#include "cubical/boundaries.hpp"
#include "cubical/document.hpp"

using namespace cubical;

namespace {

Document fixture(const char* name) { return loadDocument(std::string(FIXTURES) + name); }

std::vector<long> padded(std::vector<long> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

constexpr const char* kTiered[] = {"/stair-lin.json", "/stair-sub.json", "/weird.json",
                                   "/quarterplane.json", "/dominant.json", "/duo.json"};

}  // namespace

TEST_CASE("simplicial boundary shapes") {
  {
    Document d = fixture("/stair-lin.json");
    Boundaries b(*d.tiered);
    SimplicialComplex s = b.simplicialBoundary();
    CHECK(s.vertexCount() == 2);
    CHECK(s.maximalFaces() == std::set<std::vector<int>>{{0, 1}});
  }
  {
    Document d = fixture("/weird.json");
    Boundaries b(*d.tiered);
    SimplicialComplex s = b.simplicialBoundary();
    CHECK(s.vertexCount() == 3);
    CHECK(s.maximalFaces() == std::set<std::vector<int>>{{0, 1, 2}});
  }
  {
    Document d = fixture("/quarterplane.json");
    Boundaries b(*d.tiered);
    SimplicialComplex s = b.simplicialBoundary();
    CHECK(s.maximalFaces() == std::set<std::vector<int>>{{0, 1}});
  }
  {
    Document d = fixture("/duo.json");
    Boundaries b(*d.tiered);
    SimplicialComplex s = b.simplicialBoundary();
    CHECK(s.vertexCount() == 2);
    CHECK(s.dimension() == 0);
    CHECK(s.betti() == std::vector<long>{2});
  }
}

TEST_CASE("Roller complexes") {
  {
    Document d = fixture("/quarterplane.json");
    Boundaries b(*d.tiered);
    SimplicialComplex r = b.rollerComplex();
    CHECK(r.vertexCount() == 3);
    CHECK(r.dimension() == 1);
    CHECK(r.maximalFaces().size() == 2);  // the path through the top class
    CHECK(r.betti() == std::vector<long>{1, 0});
  }
  {
    Document d = fixture("/stair-lin.json");
    Boundaries b(*d.tiered);
    SimplicialComplex r = b.rollerComplex();
    CHECK(r.vertexCount() == 2);
    CHECK(r.maximalFaces().size() == 1);
  }
}

TEST_CASE("UBS order complex of the three-family fixture") {
  Document d = fixture("/weird.json");
  Boundaries b(*d.tiered);
  CHECK(b.ubsClasses().size() == 6);
  SimplicialComplex u = b.ubsComplex();
  CHECK(u.vertexCount() == 6);
  CHECK(padded(u.betti(), 3) == std::vector<long>{1, 0, 0});
  CHECK(padded(u.betti(true), 3) == std::vector<long>{1, 0, 0});

  // Every class's component set spans a face of the simplicial boundary:
  // the vertex set of the UBS complex embeds into the subdivision.
  SimplicialComplex s = b.simplicialBoundary();
  for (const UBSClass& c : b.ubsClasses()) {
    std::vector<int> face;
    for (const MinimalComponent& m : c.componentSet()) {
      auto it = std::find(b.minimalClasses().begin(), b.minimalClasses().end(), m);
      REQUIRE(it != b.minimalClasses().end());
      face.push_back(static_cast<int>(it - b.minimalClasses().begin()));
    }
    std::sort(face.begin(), face.end());
    CHECK(s.hasFace(face));
  }
}

TEST_CASE("umbra and section maps verify on every tiered fixture") {
  for (const char* name : kTiered) {
    CAPTURE(name);
    Document d = fixture(name);
    Boundaries b(*d.tiered);
    auto checks = b.checkMaps();
    CAPTURE(checks.detail);
    CHECK(checks.umbraOrderPreserving);
    CHECK(checks.sectionOrderPreserving);
    CHECK(checks.sectionInjective);
    CHECK(checks.roundTripIdentity);
    CHECK(checks.fibersConed);
  }
}

TEST_CASE("the three boundaries share Betti vectors over both fields") {
  for (const char* name : kTiered) {
    CAPTURE(name);
    Document d = fixture(name);
    Boundaries b(*d.tiered);
    SimplicialComplex s = b.simplicialBoundary();
    SimplicialComplex r = b.rollerComplex();
    SimplicialComplex u = b.ubsComplex();
    for (bool mod2 : {false, true}) {
      auto bs = s.betti(mod2), br = r.betti(mod2), bu = u.betti(mod2);
      std::size_t n = std::max({bs.size(), br.size(), bu.size()});
      CHECK(padded(bs, n) == padded(br, n));
      CHECK(padded(bs, n) == padded(bu, n));
    }
  }
}

TEST_CASE("nerve pair isomorphism") {
  for (const char* name : kTiered) {
    CAPTURE(name);
    Document d = fixture(name);
    Boundaries b(*d.tiered);
    auto np = b.nervePair();
    CAPTURE(np.detail);
    CHECK(np.isomorphic);
  }
  {
    Document d = fixture("/weird.json");
    auto np = Boundaries(*d.tiered).nervePair();
    CHECK(np.nerveMaxSimplices.vertexCount() == 1);
    CHECK(np.nerveRollerStars.vertexCount() == 1);
  }
  {
    Document d = fixture("/quarterplane.json");
    auto np = Boundaries(*d.tiered).nervePair();
    CHECK(np.nerveMaxSimplices.vertexCount() == 1);
  }
  {
    // Two independent facing families: two isolated vertices on both sides.
    Document d = fixture("/duo.json");
    auto np = Boundaries(*d.tiered).nervePair();
    CHECK(np.nerveMaxSimplices.vertexCount() == 2);
    CHECK(np.nerveMaxSimplices.dimension() == 0);
    CHECK(np.nerveRollerStars.vertexCount() == 2);
    CHECK(np.isomorphic);
  }
}

TEST_CASE("descending-set covers of the Roller complex") {
  for (const char* name : kTiered) {
    CAPTURE(name);
    Document d = fixture(name);
    Boundaries b(*d.tiered);
    auto sc = b.sigmaCover(b.rollerClasses());
    CHECK(sc.covers);
    CHECK(sc.piecesConed);
    CHECK(sc.intersectionsConed);
  }
  {
    Document d = fixture("/quarterplane.json");
    Boundaries b(*d.tiered);
    auto sc = b.sigmaCover(b.rollerClasses());
    CHECK(sc.nerve.vertexCount() == 1);  // one maximal class
    CHECK(sc.nerve.dimension() == 0);
  }
  {
    Document d = fixture("/duo.json");
    Boundaries b(*d.tiered);
    auto sc = b.sigmaCover(b.rollerClasses());
    CHECK(sc.nerve.vertexCount() == 2);
    CHECK(sc.nerve.dimension() == 0);
  }
  {
    // Restricting to the visible classes changes nothing on the staircase:
    // both Roller classes are umbras of visible UBS classes.
    Document d = fixture("/stair-lin.json");
    Boundaries b(*d.tiered);
    auto vis = b.l1VisibleClasses();
    CHECK(vis.size() == 2);
    auto sc = b.sigmaCover(vis);
    CHECK(sc.covers);
    CHECK(sc.piecesConed);
    CHECK(sc.nerve.vertexCount() == 1);
  }
}
