#include <doctest.h>

#include <algorithm>

#include "cubical/document.hpp"
#include "cubical/roller.hpp"
#include "cubical/ubs.hpp"

using namespace cubical;

namespace {

Document fixture(const char* name) { return loadDocument(std::string(FIXTURES) + name); }

int familyOf(const TieredPocset& t, const std::string& name) {
  for (int f = 0; f < t.familyCount(); ++f)
    if (t.familyName(f) == name) return f;
  throw DomainError("no family " + name);
}

}  // namespace

TEST_CASE("staircase full hyperplane set is a UBS") {
  Document d = fixture("/stair-lin.json");
  UBSCalculus calc(*d.tiered);
  int V = familyOf(*d.tiered, "V"), H = familyOf(*d.tiered, "H");
  CHECK(calc.isUBS(UBSDescriptor::tailsAtZero({V, H})));
  CHECK(calc.isUBS(UBSDescriptor::tailsAtZero({V})));
  // The H tail alone is also a UBS (inseparable: nothing separates two
  // horizontals).
  CHECK(calc.isUBS(UBSDescriptor::tailsAtZero({H})));
}

TEST_CASE("B and D tails of the three-family fixture are separated") {
  Document d = fixture("/weird.json");
  UBSCalculus calc(*d.tiered);
  int B = familyOf(*d.tiered, "B"), S = familyOf(*d.tiered, "S"),
      D = familyOf(*d.tiered, "D");
  UBSWitness w;
  CHECK(!calc.isUBS(UBSDescriptor::tailsAtZero({B, D}), &w));
  CHECK(w.reason == "separated");
  REQUIRE(w.hyps.size() == 3);
  // The separator is a middle-family hyperplane between the other two.
  CHECK(w.hyps[2].family == S);
  CHECK(w.hyps[0].family != w.hyps[1].family);
  CHECK(calc.isUBS(UBSDescriptor::tailsAtZero({B, S, D})));
  CHECK(calc.isUBS(UBSDescriptor::tailsAtZero({B, S})));
  CHECK(calc.isUBS(UBSDescriptor::tailsAtZero({S, D})));
}

TEST_CASE("facing triples and finiteness are rejected with witnesses") {
  Document d = fixture("/weird.json");
  UBSCalculus calc(*d.tiered);
  UBSWitness w;
  CHECK(!calc.isUBS(UBSDescriptor{}, &w));
  CHECK(w.reason == "finite");
  UBSDescriptor fin;
  fin.add = {{0, 0}, {1, 3}};
  CHECK(!calc.isUBS(fin, &w));
  CHECK(w.reason == "finite");
}

TEST_CASE("pruning drops members whose both sides hold finitely many") {
  // Quarterplane: V_0 crosses every horizontal, so neither of its sides
  // holds infinitely many members of the H tail; pruning removes it.
  Document q = fixture("/quarterplane.json");
  UBSCalculus qc(*q.tiered);
  int qV = familyOf(*q.tiered, "V"), qH = familyOf(*q.tiered, "H");
  UBSDescriptor s = UBSDescriptor::tailsAtZero({qH});
  s.add = {{qV, 0}};
  UBSDescriptor p = qc.prune(s);
  CHECK(p == UBSDescriptor::tailsAtZero({qH}));
  // Idempotent, and the full set is already pruned.
  CHECK(qc.prune(p) == p);

  // Staircase: every horizontal nests on V_0's deep side, so V_0 has a
  // canonical halfspace and survives pruning (the set is not a UBS, though:
  // deeper verticals separate V_0 from deep horizontals).
  Document d = fixture("/stair-lin.json");
  UBSCalculus calc(*d.tiered);
  int V = familyOf(*d.tiered, "V"), H = familyOf(*d.tiered, "H");
  UBSDescriptor t = UBSDescriptor::tailsAtZero({H});
  t.add = {{V, 0}};
  CHECK(calc.prune(t) == t);
  UBSWitness w;
  CHECK(!calc.isUBS(t, &w));
  CHECK(w.reason == "separated");
  UBSDescriptor full = UBSDescriptor::tailsAtZero({V, H});
  CHECK(calc.prune(full) == full);

  Document wd = fixture("/weird.json");
  UBSCalculus wc(*wd.tiered);
  UBSDescriptor all = UBSDescriptor::tailsAtZero({0, 1, 2});
  CHECK(wc.prune(all) == all);
}

TEST_CASE("inseparable closure pulls in the separating family") {
  Document d = fixture("/weird.json");
  UBSCalculus calc(*d.tiered);
  int B = familyOf(*d.tiered, "B"), S = familyOf(*d.tiered, "S"),
      D = familyOf(*d.tiered, "D");
  UBSDescriptor c = calc.inseparableClosure(UBSDescriptor::tailsAtZero({B, D}));
  CHECK(c.tailFamilies() == std::set<int>{B, S, D});
  CHECK(calc.isUBS(c));
  // Closing a UBS changes nothing.
  UBSDescriptor bs = UBSDescriptor::tailsAtZero({B, S});
  CHECK(calc.inseparableClosure(bs).tailFamilies() == bs.tailFamilies());
}

TEST_CASE("minimal decomposition of the staircase and the three-family fixture") {
  Document d = fixture("/stair-lin.json");
  UBSCalculus calc(*d.tiered);
  int V = familyOf(*d.tiered, "V"), H = familyOf(*d.tiered, "H");
  UBSClass c = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V, H}));
  REQUIRE(c.components.size() == 2);
  // Dominance order: H above V.
  CHECK(c.components[0].families == std::set<int>{V});
  CHECK(c.components[1].families == std::set<int>{H});
  CHECK(calc.above(c.components[1], c.components[0]));
  CHECK(!calc.above(c.components[0], c.components[1]));

  Document w = fixture("/weird.json");
  UBSCalculus wc(*w.tiered);
  UBSClass cw = wc.minimalDecomposition(UBSDescriptor::tailsAtZero({0, 1, 2}));
  CHECK(cw.dimension() == 3);
  std::set<MinimalComponent> comps = cw.componentSet();
  CHECK(comps.count(MinimalComponent{{0}}));
  CHECK(comps.count(MinimalComponent{{1}}));
  CHECK(comps.count(MinimalComponent{{2}}));

  // A single family tail is its own decomposition.
  UBSClass single = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V}));
  REQUIRE(single.components.size() == 1);
  CHECK(single.components[0].families == std::set<int>{V});
}

TEST_CASE("dominant components") {
  Document d = fixture("/dominant.json");
  UBSCalculus calc(*d.tiered);
  int H = familyOf(*d.tiered, "H"), V = familyOf(*d.tiered, "V");
  UBSClass c = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({H, V}));
  REQUIRE(c.components.size() == 2);
  auto dom = calc.dominantComponents(c);
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    bool isH = c.components[i].families == std::set<int>{H};
    CHECK(dom[i] == isH);
  }

  // Staircase: H dominant, V not.
  Document s = fixture("/stair-lin.json");
  UBSCalculus sc(*s.tiered);
  UBSClass cs = sc.minimalDecomposition(UBSDescriptor::tailsAtZero({0, 1}));
  auto doms = sc.dominantComponents(cs);
  for (std::size_t i = 0; i < cs.components.size(); ++i)
    CHECK(doms[i] == (cs.components[i].families ==
                      std::set<int>{familyOf(*s.tiered, "H")}));

  // A single component is vacuously dominant.
  UBSClass single = sc.minimalDecomposition(
      UBSDescriptor::tailsAtZero({familyOf(*s.tiered, "V")}));
  CHECK(sc.dominantComponents(single) == std::vector<bool>{true});
}

TEST_CASE("class order preceq") {
  Document d = fixture("/stair-lin.json");
  UBSCalculus calc(*d.tiered);
  int V = familyOf(*d.tiered, "V"), H = familyOf(*d.tiered, "H");
  UBSClass cv = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V}));
  UBSClass ch = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({H}));
  UBSClass cvh = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V, H}));
  CHECK(preceq(cv, cvh));
  CHECK(preceq(ch, cvh));
  CHECK(!preceq(cvh, ch));
  CHECK(!preceq(cv, ch));
  for (const UBSClass* c : {&cv, &ch, &cvh}) CHECK(preceq(*c, *c));
}

TEST_CASE("umbras and sections on the staircase") {
  Document d = fixture("/stair-lin.json");
  RollerCalculus rc(*d.tiered);
  int V = familyOf(*d.tiered, "V"), H = familyOf(*d.tiered, "H");
  const UBSCalculus& calc = rc.ubs();
  UBSClass cv = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V}));
  UBSClass ch = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({H}));
  UBSClass cvh = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V, H}));

  // The umbra map is not injective: [H] and [V u H] share an umbra.
  CHECK(rc.umbra(ch) == rc.umbra(cvh));
  CHECK(!(rc.umbra(cv) == rc.umbra(ch)));

  // Its section picks the top class back out.
  CHECK(rc.classUBS(rc.umbra(ch)) == cvh);
  CHECK(rc.classUBS(rc.umbra(cv)) == cv);

  CHECK(!rc.l1Visible(ch));
  CHECK(rc.l1Visible(cv));
  CHECK(rc.l1Visible(cvh));

  // Two Roller classes joined by one edge.
  auto cls = rc.enumerateClasses();
  CHECK(cls.classes.size() == 2);
  CHECK(rollerLeq(RollerClass{{V}}, RollerClass{{V, H}}));
  CHECK(!rollerLeq(RollerClass{{V, H}}, RollerClass{{V}}));
  int edges = 0;
  for (const auto& a : cls.classes)
    for (const auto& b : cls.classes)
      if (!(a == b) && rollerLeq(a, b)) ++edges;
  CHECK(edges == 1);
}

TEST_CASE("sublinear staircase mirrors the linear one") {
  Document d = fixture("/stair-sub.json");
  RollerCalculus rc(*d.tiered);
  int V = familyOf(*d.tiered, "V"), H = familyOf(*d.tiered, "H");
  const UBSCalculus& calc = rc.ubs();
  UBSClass ch = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({H}));
  UBSClass cvh = calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V, H}));
  CHECK(rc.umbra(ch) == rc.umbra(cvh));
  CHECK(rc.classUBS(rc.umbra(ch)) == cvh);
  CHECK(!rc.l1Visible(ch));
  CHECK(rc.l1Visible(cvh));
  CHECK(rc.l1Visible(calc.minimalDecomposition(UBSDescriptor::tailsAtZero({V}))));
  CHECK(rc.enumerateClasses().classes.size() == 2);
}

TEST_CASE("quarterplane Roller poset is a three-vertex path") {
  Document d = fixture("/quarterplane.json");
  RollerCalculus rc(*d.tiered);
  int V = familyOf(*d.tiered, "V"), H = familyOf(*d.tiered, "H");
  auto cls = rc.enumerateClasses();
  REQUIRE(cls.classes.size() == 3);
  RollerClass v{{V}}, h{{H}}, top{{V, H}};
  CHECK(std::count(cls.classes.begin(), cls.classes.end(), v) == 1);
  CHECK(std::count(cls.classes.begin(), cls.classes.end(), h) == 1);
  CHECK(std::count(cls.classes.begin(), cls.classes.end(), top) == 1);
  CHECK(rollerLeq(v, top));
  CHECK(rollerLeq(h, top));
  CHECK(!rollerLeq(v, h));
  CHECK(!rollerLeq(h, v));
  // U^R of the (deep V, shallow H) class is the V tail.
  UBSClass back = rc.classUBS(v);
  REQUIRE(back.components.size() == 1);
  CHECK(back.components[0].families == std::set<int>{V});
  // Everything here is visible.
  for (const UBSClass& a : rc.enumerateUBSClasses()) CHECK(rc.l1Visible(a));
}

TEST_CASE("section and umbra laws across fixtures") {
  for (const char* name :
       {"/stair-lin.json", "/stair-sub.json", "/weird.json", "/quarterplane.json",
        "/dominant.json", "/duo.json"}) {
    CAPTURE(name);
    Document d = fixture(name);
    RollerCalculus rc(*d.tiered);
    auto ubsClasses = rc.enumerateUBSClasses();
    auto cls = rc.enumerateClasses();
    std::set<RollerClass> seen;
    for (const UBSClass& a : ubsClasses) {
      RollerClass u = rc.umbra(a);
      seen.insert(u);
      UBSClass s = rc.classUBS(u);
      // Round trip on the Roller side and inflation on the UBS side.
      CHECK(rc.umbra(s) == u);
      CHECK(preceq(a, s));
      CHECK(rc.classUBS(rc.umbra(s)) == s);
      // Order preservation of the umbra map.
      for (const UBSClass& b : ubsClasses)
        if (preceq(a, b)) CHECK(rollerLeq(u, rc.umbra(b)));
    }
    // R^U is onto the enumerated classes.
    CHECK(seen == std::set<RollerClass>(cls.classes.begin(), cls.classes.end()));
    // Maximal UBS classes are always visible.
    for (const UBSClass& a : ubsClasses) {
      bool maximal = true;
      for (const UBSClass& b : ubsClasses)
        if (!(a == b) && preceq(a, b)) maximal = false;
      if (maximal) CHECK(rc.l1Visible(a));
    }
  }
}

TEST_CASE("three-family fixture classes form a chain") {
  Document d = fixture("/weird.json");
  RollerCalculus rc(*d.tiered);
  auto cls = rc.enumerateClasses();
  // Pinned regression: the three umbras are totally ordered.
  REQUIRE(cls.classes.size() == 3);
  for (std::size_t i = 0; i < cls.classes.size(); ++i)
    for (std::size_t j = i; j < cls.classes.size(); ++j)
      CHECK(rollerLeq(cls.classes[i], cls.classes[j]));
  CHECK(rc.enumerateUBSClasses().size() == 6);
  // The maximal class's umbra is the maximal Roller class.
  UBSClass top = rc.ubs().minimalDecomposition(UBSDescriptor::tailsAtZero({0, 1, 2}));
  CHECK(rc.umbra(top) == cls.classes.back());
}
