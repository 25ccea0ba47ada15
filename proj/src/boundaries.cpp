#include "cubical/boundaries.hpp"

#include <algorithm>

namespace cubical {

Boundaries::Boundaries(const TieredPocset& t, long window) : t_(t), roller_(t, window) {
  ubsClasses_ = roller_.enumerateUBSClasses();
  std::set<MinimalComponent> comps;
  for (const auto& c : ubsClasses_)
    for (const auto& m : c.components) comps.insert(m);
  minimals_.assign(comps.begin(), comps.end());
  rollerClasses_ = roller_.enumerateClasses().classes;
}

int Boundaries::componentIndex(const MinimalComponent& c) const {
  for (std::size_t i = 0; i < minimals_.size(); ++i)
    if (minimals_[i] == c) return static_cast<int>(i);
  throw DomainError("unknown minimal class");
}

int Boundaries::rollerIndex(const RollerClass& v) const {
  for (std::size_t i = 0; i < rollerClasses_.size(); ++i)
    if (rollerClasses_[i] == v) return static_cast<int>(i);
  throw DomainError("unknown Roller class");
}

std::string Boundaries::componentLabel(const MinimalComponent& c) const {
  std::string s = "[";
  bool first = true;
  for (int f : c.families) {
    if (!first) s += "+";
    s += t_.familyName(f);
    first = false;
  }
  return s + "]";
}

std::string Boundaries::classLabel(const UBSClass& c) const {
  std::string s;
  for (const auto& m : c.components) s += componentLabel(m);
  return s;
}

SimplicialComplex Boundaries::simplicialBoundary() const {
  std::vector<std::string> labels;
  for (const auto& m : minimals_) labels.push_back(componentLabel(m));
  SimplicialComplex s(labels);
  for (const auto& c : ubsClasses_) {
    std::vector<int> face;
    for (const auto& m : c.components) face.push_back(componentIndex(m));
    s.addFace(face);
  }
  return s;
}

SimplicialComplex Boundaries::rollerComplex() const {
  int n = static_cast<int>(rollerClasses_.size());
  std::vector<std::string> labels;
  for (const auto& v : rollerClasses_) labels.push_back(roller_.fingerprintString(v));
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && rollerLeq(rollerClasses_[a], rollerClasses_[b]) &&
          !(rollerClasses_[a] == rollerClasses_[b]))
        less[a][b] = 1;
  return orderComplex(labels, less);
}

SimplicialComplex Boundaries::ubsComplex() const {
  int n = static_cast<int>(ubsClasses_.size());
  std::vector<std::string> labels;
  for (const auto& c : ubsClasses_) labels.push_back(classLabel(c));
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && preceq(ubsClasses_[a], ubsClasses_[b]) &&
          !(ubsClasses_[a] == ubsClasses_[b]))
        less[a][b] = 1;
  return orderComplex(labels, less);
}

std::vector<int> Boundaries::umbraVertexMap() const {
  std::vector<int> out;
  for (const auto& c : ubsClasses_) out.push_back(rollerIndex(roller_.umbra(c)));
  return out;
}

std::vector<int> Boundaries::sectionVertexMap() const {
  std::vector<int> out;
  for (const auto& v : rollerClasses_) {
    UBSClass c = roller_.classUBS(v);
    int idx = -1;
    for (std::size_t i = 0; i < ubsClasses_.size(); ++i)
      if (ubsClasses_[i] == c) idx = static_cast<int>(i);
    if (idx < 0) throw DomainError("section image is not an enumerated UBS class");
    out.push_back(idx);
  }
  return out;
}

Boundaries::MapChecks Boundaries::checkMaps() const {
  MapChecks mc;
  auto ru = umbraVertexMap();
  auto ur = sectionVertexMap();
  mc.umbraOrderPreserving = true;
  for (std::size_t a = 0; a < ubsClasses_.size(); ++a)
    for (std::size_t b = 0; b < ubsClasses_.size(); ++b)
      if (preceq(ubsClasses_[a], ubsClasses_[b]) &&
          !rollerLeq(rollerClasses_[ru[a]], rollerClasses_[ru[b]])) {
        mc.umbraOrderPreserving = false;
        mc.detail += "umbra breaks order at " + classLabel(ubsClasses_[a]) + "; ";
      }
  mc.sectionOrderPreserving = true;
  for (std::size_t a = 0; a < rollerClasses_.size(); ++a)
    for (std::size_t b = 0; b < rollerClasses_.size(); ++b)
      if (rollerLeq(rollerClasses_[a], rollerClasses_[b]) &&
          !preceq(ubsClasses_[ur[a]], ubsClasses_[ur[b]])) {
        mc.sectionOrderPreserving = false;
        mc.detail += "section breaks order; ";
      }
  std::set<int> image(ur.begin(), ur.end());
  mc.sectionInjective = image.size() == ur.size();
  mc.roundTripIdentity = true;
  for (std::size_t a = 0; a < rollerClasses_.size(); ++a)
    if (ru[ur[a]] != static_cast<int>(a)) mc.roundTripIdentity = false;
  // Quillen fibers of the umbra: classes mapping at or below v, apex the
  // section of v.
  mc.fibersConed = true;
  for (std::size_t vi = 0; vi < rollerClasses_.size(); ++vi) {
    const UBSClass& apex = ubsClasses_[ur[vi]];
    for (std::size_t a = 0; a < ubsClasses_.size(); ++a) {
      if (!rollerLeq(rollerClasses_[ru[a]], rollerClasses_[vi])) continue;
      if (!(ubsClasses_[a] == apex) && !preceq(ubsClasses_[a], apex) &&
          !preceq(apex, ubsClasses_[a])) {
        mc.fibersConed = false;
        mc.detail += "fiber over " + roller_.fingerprintString(rollerClasses_[vi]) +
                     " not coned at " + classLabel(ubsClasses_[a]) + "; ";
      }
    }
  }
  return mc;
}

Boundaries::NervePair Boundaries::nervePair() const {
  NervePair np;
  SimplicialComplex sb = simplicialBoundary();
  // Cover of the simplicial boundary by its maximal simplices.
  std::vector<std::set<int>> simplexPieces;
  std::vector<std::string> simplexLabels;
  std::vector<std::vector<int>> maxFaces;
  for (const auto& f : sb.maximalFaces()) {
    simplexPieces.emplace_back(f.begin(), f.end());
    maxFaces.push_back(f);
    std::string l = "s";
    for (int v : f) l += "." + sb.label(v);
    simplexLabels.push_back(l);
  }
  np.nerveMaxSimplices = nerveOfVertexSets(simplexLabels, simplexPieces);

  // Cover of the Roller complex by descending sets of maximal classes.
  std::vector<int> maximal;
  for (std::size_t a = 0; a < rollerClasses_.size(); ++a) {
    bool top = true;
    for (std::size_t b = 0; b < rollerClasses_.size(); ++b)
      if (a != b && rollerLeq(rollerClasses_[a], rollerClasses_[b])) top = false;
    if (top) maximal.push_back(static_cast<int>(a));
  }
  std::vector<std::set<int>> starPieces;
  std::vector<std::string> starLabels;
  for (int m : maximal) {
    std::set<int> down;
    for (std::size_t b = 0; b < rollerClasses_.size(); ++b)
      if (rollerLeq(rollerClasses_[b], rollerClasses_[m])) down.insert(static_cast<int>(b));
    starPieces.push_back(down);
    starLabels.push_back("Y" + roller_.fingerprintString(rollerClasses_[m]));
  }
  np.nerveRollerStars = nerveOfVertexSets(starLabels, starPieces);

  // The comparison map: a maximal simplex goes to the umbra of its class.
  if (maxFaces.size() != maximal.size()) {
    np.detail = "piece counts differ";
    return np;
  }
  std::vector<int> pieceMap(maxFaces.size(), -1);
  for (std::size_t i = 0; i < maxFaces.size(); ++i) {
    std::set<MinimalComponent> comps;
    for (int v : maxFaces[i]) comps.insert(minimals_[v]);
    const UBSClass* cls = nullptr;
    for (const auto& c : ubsClasses_)
      if (c.componentSet() == comps) cls = &c;
    if (!cls) {
      np.detail = "maximal simplex is not a UBS class";
      return np;
    }
    RollerClass v = roller_.umbra(*cls);
    for (std::size_t m = 0; m < maximal.size(); ++m)
      if (rollerClasses_[maximal[m]] == v) pieceMap[i] = static_cast<int>(m);
    if (pieceMap[i] < 0) {
      np.detail = "umbra of a maximal simplex is not a maximal class";
      return np;
    }
  }
  std::set<int> image(pieceMap.begin(), pieceMap.end());
  if (image.size() != pieceMap.size()) {
    np.detail = "comparison map not injective";
    return np;
  }
  // Face preservation in both directions.
  auto interA = [&](const std::vector<int>& sel) {
    std::vector<std::set<std::vector<int>>> dummy;
    std::set<int> common = simplexPieces[sel[0]];
    for (int i : sel) {
      std::set<int> next;
      for (int v : common)
        if (simplexPieces[i].count(v)) next.insert(v);
      common = next;
    }
    return !common.empty();
  };
  auto interB = [&](const std::vector<int>& sel) {
    std::set<int> common = starPieces[sel[0]];
    for (int i : sel) {
      std::set<int> next;
      for (int v : common)
        if (starPieces[i].count(v)) next.insert(v);
      common = next;
    }
    return !common.empty();
  };
  int n = static_cast<int>(maxFaces.size());
  np.isomorphic = true;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> selA, selB;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        selA.push_back(i);
        selB.push_back(pieceMap[i]);
      }
    if (interA(selA) != interB(selB)) {
      np.isomorphic = false;
      np.detail = "intersection patterns disagree";
      break;
    }
  }
  return np;
}

std::vector<RollerClass> Boundaries::l1VisibleClasses() const {
  std::vector<RollerClass> out;
  for (const auto& v : rollerClasses_)
    if (roller_.umbra(roller_.classUBS(v)) == v && roller_.l1Visible(roller_.classUBS(v)))
      out.push_back(v);
  return out;
}

Boundaries::SigmaCover Boundaries::sigmaCover(const std::vector<RollerClass>& selected) const {
  SigmaCover sc;
  int n = static_cast<int>(selected.size());
  if (n == 0) return sc;
  std::vector<int> maximal;
  for (int a = 0; a < n; ++a) {
    bool top = true;
    for (int b = 0; b < n; ++b)
      if (a != b && rollerLeq(selected[a], selected[b]) && !(selected[a] == selected[b]))
        top = false;
    if (top) maximal.push_back(a);
  }
  std::vector<std::set<int>> pieces;
  std::vector<std::string> labels;
  for (int m : maximal) {
    std::set<int> down;
    for (int b = 0; b < n; ++b)
      if (rollerLeq(selected[b], selected[m])) down.insert(b);
    pieces.push_back(down);
    labels.push_back("S" + roller_.fingerprintString(selected[m]));
  }
  sc.covers = true;
  for (int b = 0; b < n; ++b) {
    bool hit = false;
    for (const auto& p : pieces)
      if (p.count(b)) hit = true;
    if (!hit) sc.covers = false;
  }
  // Order complex of the selected classes, for cone checks.
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  std::vector<std::string> clabels;
  for (int a = 0; a < n; ++a) clabels.push_back(roller_.fingerprintString(selected[a]));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && rollerLeq(selected[a], selected[b]) && !(selected[a] == selected[b]))
        less[a][b] = 1;
  SimplicialComplex oc = orderComplex(clabels, less);
  sc.piecesConed = true;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    SimplicialComplex piece = oc.fullSubcomplex(pieces[i]);
    if (!piece.isConeWithApex(maximal[i])) sc.piecesConed = false;
  }
  sc.intersectionsConed = true;
  int np = static_cast<int>(pieces.size());
  for (unsigned mask = 1; mask < (1u << np); ++mask) {
    std::set<int> common;
    bool first = true;
    for (int i = 0; i < np; ++i)
      if ((mask >> i) & 1) {
        if (first) {
          common = pieces[i];
          first = false;
        } else {
          std::set<int> next;
          for (int v : common)
            if (pieces[i].count(v)) next.insert(v);
          common = next;
        }
      }
    if (common.empty()) continue;
    SimplicialComplex inter = oc.fullSubcomplex(common);
    if (inter.empty() || !inter.coneApex()) sc.intersectionsConed = false;
  }
  sc.nerve = nerveOfVertexSets(labels, pieces);
  return sc;
}

}  // namespace cubical
