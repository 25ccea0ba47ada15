#include "cubical/cubecomplex.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace cubical {

namespace {

// 2-SAT feasibility for extending a partial orientation. Variable h true
// means the deep side is chosen; every disjoint halfspace pair contributes
// the clause forbidding the two choices together.
class TwoSat {
 public:
  explicit TwoSat(const FinitePocset& p) : p_(p), n_(p.size()) {}

  // fixed: -1 unknown, 0 minus, 1 plus.
  bool feasible(const std::vector<int>& fixed) const {
    int nodes = 2 * n_;
    std::vector<std::vector<int>> adj(nodes), radj(nodes);
    auto lit = [&](int var, bool val) { return 2 * var + (val ? 1 : 0); };
    auto addImpl = [&](int u, int v) {
      adj[u].push_back(v);
      radj[v].push_back(u);
    };
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        for (int sa = 0; sa < 2; ++sa)
          for (int sb = 0; sb < 2; ++sb)
            if (p_.hsDisjoint(a, sa ? Side::plus : Side::minus, b,
                              sb ? Side::plus : Side::minus)) {
              addImpl(lit(a, sa), lit(b, !sb));
              addImpl(lit(b, sb), lit(a, !sa));
            }
    for (int a = 0; a < n_; ++a)
      if (fixed[a] != -1) addImpl(lit(a, !fixed[a]), lit(a, fixed[a]));
    // Kosaraju SCC.
    std::vector<int> order, comp(nodes, -1);
    std::vector<char> seen(nodes, 0);
    std::function<void(int)> dfs1 = [&](int u) {
      seen[u] = 1;
      for (int v : adj[u])
        if (!seen[v]) dfs1(v);
      order.push_back(u);
    };
    for (int u = 0; u < nodes; ++u)
      if (!seen[u]) dfs1(u);
    int c = 0;
    std::function<void(int)> dfs2 = [&](int u) {
      comp[u] = c;
      for (int v : radj[u])
        if (comp[v] == -1) dfs2(v);
    };
    for (int i = nodes - 1; i >= 0; --i)
      if (comp[order[i]] == -1) {
        dfs2(order[i]);
        ++c;
      }
    for (int a = 0; a < n_; ++a)
      if (comp[2 * a] == comp[2 * a + 1]) return false;
    return true;
  }

 private:
  const FinitePocset& p_;
  int n_;
};

bool consistentPair(const FinitePocset& p, const Orientation& o, int a, int b) {
  return !p.hsDisjoint(a, o.side(a), b, o.side(b));
}

bool consistent(const FinitePocset& p, const Orientation& o) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (!consistentPair(p, o, a, b)) return false;
  return true;
}

}  // namespace

Orientation baseOrientation(const FinitePocset& p) {
  int n = p.size();
  TwoSat sat(p);
  std::vector<int> fixed(n, -1);
  if (!sat.feasible(fixed)) throw DomainError("pocset admits no consistent orientation");
  for (int h = 0; h < n; ++h) {
    fixed[h] = 0;
    if (!sat.feasible(fixed)) fixed[h] = 1;
  }
  Orientation o = Orientation::zeros(n);
  for (int h = 0; h < n; ++h) o.set(h, fixed[h] == 1);
  return o;
}

std::vector<Orientation> allConsistentOrientations(const FinitePocset& p) {
  int n = p.size();
  if (n > 24) throw ResourceError("brute-force orientation enumeration capped at 24 hyperplanes");
  std::vector<Orientation> out;
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    Orientation o = Orientation::zeros(n);
    o.words[0] = bits;
    if (consistent(p, o)) out.push_back(o);
  }
  return out;
}

CubeComplex CubeComplex::realize(const FinitePocset& p, std::size_t vertexCap) {
  CubeComplex x(p);
  Orientation base = baseOrientation(p);
  x.verts_.push_back(base);
  x.index_[base] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (int h = 0; h < p.size(); ++h) {
      if (!x.flippable(v, h)) continue;
      Orientation o = x.verts_[v];
      o.set(h, !o.get(h));
      if (x.index_.count(o)) continue;
      if (x.verts_.size() >= vertexCap)
        throw ResourceError("realization exceeded the vertex cap");
      x.index_[o] = x.verts_.size();
      x.verts_.push_back(o);
      queue.push_back(x.verts_.size() - 1);
    }
  }
  return x;
}

std::size_t CubeComplex::indexOf(const Orientation& o) const {
  auto it = index_.find(o);
  if (it == index_.end()) throw DomainError("orientation is not a vertex of the complex");
  return it->second;
}

bool CubeComplex::contains(const Orientation& o) const { return index_.count(o) != 0; }

bool CubeComplex::flippable(std::size_t v, int h) const {
  const Orientation& o = verts_[v];
  Side flippedSide = opposite(o.side(h));
  for (int k = 0; k < p_.size(); ++k) {
    if (k == h) continue;
    if (p_.hsDisjoint(h, flippedSide, k, o.side(k))) return false;
  }
  return true;
}

std::size_t CubeComplex::neighbor(std::size_t v, int h) const {
  if (!flippable(v, h)) return npos;
  Orientation o = verts_[v];
  o.set(h, !o.get(h));
  auto it = index_.find(o);
  return it == index_.end() ? npos : it->second;
}

std::vector<int> CubeComplex::separators(std::size_t x, std::size_t y) const {
  std::vector<int> out;
  for (int h = 0; h < p_.size(); ++h)
    if (verts_[x].get(h) != verts_[y].get(h)) out.push_back(h);
  return out;
}

std::size_t CubeComplex::median(std::size_t x, std::size_t y, std::size_t z) const {
  Orientation m = Orientation::zeros(p_.size());
  for (int h = 0; h < p_.size(); ++h) {
    int votes = verts_[x].get(h) + verts_[y].get(h) + verts_[z].get(h);
    m.set(h, votes >= 2);
  }
  return indexOf(m);
}

std::vector<std::size_t> CubeComplex::interval(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < verts_.size(); ++v) {
    bool between = true;
    for (int h = 0; h < p_.size() && between; ++h)
      if (verts_[v].get(h) != verts_[x].get(h) && verts_[v].get(h) != verts_[y].get(h))
        between = false;
    if (between) out.push_back(v);
  }
  return out;
}

std::vector<HalfSpace> CubeComplex::convexSignature(const std::vector<std::size_t>& vs) const {
  std::vector<HalfSpace> sig;
  if (vs.empty()) throw DomainError("convexSignature: empty vertex set");
  for (int h = 0; h < p_.size(); ++h) {
    bool allPlus = true, allMinus = true;
    for (std::size_t v : vs) {
      if (verts_[v].get(h)) allMinus = false;
      else allPlus = false;
    }
    if (allPlus) sig.push_back({p_.tag(h).family == -1 ? HypId{-1, h} : p_.tag(h), Side::plus});
    if (allMinus) sig.push_back({p_.tag(h).family == -1 ? HypId{-1, h} : p_.tag(h), Side::minus});
  }
  return sig;
}

std::vector<std::size_t> CubeComplex::hull(std::vector<std::size_t> vs) const {
  if (vs.empty()) return vs;
  std::vector<int> forced(p_.size(), -1);  // -1 free, 0 minus, 1 plus
  for (int h = 0; h < p_.size(); ++h) {
    bool allPlus = true, allMinus = true;
    for (std::size_t v : vs) {
      if (verts_[v].get(h)) allMinus = false;
      else allPlus = false;
    }
    if (allPlus) forced[h] = 1;
    if (allMinus) forced[h] = 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < verts_.size(); ++v) {
    bool in = true;
    for (int h = 0; h < p_.size() && in; ++h)
      if (forced[h] != -1 && verts_[v].get(h) != (forced[h] == 1)) in = false;
    if (in) out.push_back(v);
  }
  return out;
}

std::size_t CubeComplex::gate(std::size_t x, const std::vector<std::size_t>& target) const {
  if (target.empty()) throw DomainError("gate: empty target");
  Orientation g = verts_[x];
  for (int h = 0; h < p_.size(); ++h) {
    bool allPlus = true, allMinus = true;
    for (std::size_t v : target) {
      if (verts_[v].get(h)) allMinus = false;
      else allPlus = false;
    }
    if (allPlus) g.set(h, true);
    if (allMinus) g.set(h, false);
  }
  std::size_t gi = indexOf(g);
  if (std::find(target.begin(), target.end(), gi) == target.end())
    throw DomainError("gate: target set is not convex");
  return gi;
}

std::vector<std::size_t> CubeComplex::geodesic(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> path{x};
  std::size_t v = x;
  while (v != y) {
    bool moved = false;
    for (int h = 0; h < p_.size(); ++h) {
      if (verts_[v].get(h) == verts_[y].get(h)) continue;
      std::size_t w = neighbor(v, h);
      if (w == npos) continue;
      v = w;
      path.push_back(v);
      moved = true;
      break;
    }
    if (!moved) throw DomainError("geodesic: stuck, complex not connected between endpoints");
  }
  return path;
}

CubeComplex::NormalPath CubeComplex::normalCubePath(std::size_t x, std::size_t y) const {
  NormalPath np;
  np.vertices.push_back(x);
  std::size_t v = x;
  while (v != y) {
    std::vector<int> sep = separators(v, y);
    // First cube flips the separators adjacent to v: those whose halfspace
    // toward y is maximal among the separator halfspaces toward y.
    std::vector<int> minimal;
    for (int h : sep) {
      Side sh = verts_[y].side(h);
      bool isMax = true;
      for (int k : sep) {
        if (k == h) continue;
        Side sk = verts_[y].side(k);
        if (p_.hsSubset(h, sh, k, sk)) {
          isMax = false;
          break;
        }
      }
      if (isMax) minimal.push_back(h);
    }
    if (minimal.empty()) throw DomainError("normal cube path: no maximal separator");
    Orientation o = verts_[v];
    for (int h : minimal) o.set(h, !o.get(h));
    v = indexOf(o);
    np.vertices.push_back(v);
    np.cubes.push_back(minimal);
  }
  return np;
}

std::vector<std::size_t> CubeComplex::cubeCensus() const {
  std::vector<std::size_t> census(1, verts_.size());
  for (std::size_t v = 0; v < verts_.size(); ++v) {
    std::vector<int> cand;
    for (int h = 0; h < p_.size(); ++h)
      if (!verts_[v].get(h) && flippable(v, h)) cand.push_back(h);
    std::vector<int> clique;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (!clique.empty()) {
        if (census.size() <= clique.size()) census.resize(clique.size() + 1, 0);
        census[clique.size()] += 1;
      }
      for (std::size_t i = start; i < cand.size(); ++i) {
        bool ok = true;
        for (int k : clique)
          if (!p_.transverse(cand[i], k)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        clique.push_back(cand[i]);
        rec(i + 1);
        clique.pop_back();
      }
    };
    rec(0);
  }
  return census;
}

int CubeComplex::dimension() const { return static_cast<int>(cubeCensus().size()) - 1; }

std::vector<CubeComplex::Cube> CubeComplex::maximalCubes() const {
  std::vector<Cube> out;
  for (std::size_t v = 0; v < verts_.size(); ++v) {
    std::vector<int> flips;
    for (int h = 0; h < p_.size(); ++h)
      if (flippable(v, h)) flips.push_back(h);
    std::vector<int> cand;
    for (int h : flips)
      if (!verts_[v].get(h)) cand.push_back(h);
    std::vector<int> clique;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      // Maximality: no flippable hyperplane outside the clique is transverse
      // to the whole clique.
      bool maximal = true;
      for (int h : flips) {
        if (std::find(clique.begin(), clique.end(), h) != clique.end()) continue;
        bool allTrans = true;
        for (int k : clique)
          if (!p_.transverse(h, k)) {
            allTrans = false;
            break;
          }
        if (allTrans) {
          maximal = false;
          break;
        }
      }
      if (maximal && (!clique.empty() || flips.empty())) out.push_back({v, clique});
      for (std::size_t i = start; i < cand.size(); ++i) {
        bool ok = true;
        for (int k : clique)
          if (!p_.transverse(cand[i], k)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        clique.push_back(cand[i]);
        rec(i + 1);
        clique.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

FinitePocset CubeComplex::toPocset() const {
  std::vector<std::string> names;
  std::vector<HypId> tags;
  for (int h = 0; h < p_.size(); ++h) {
    names.push_back(p_.name(h));
    tags.push_back(p_.tag(h));
  }
  FinitePocset q(std::move(names), std::move(tags));
  for (int a = 0; a < p_.size(); ++a)
    for (int b = a + 1; b < p_.size(); ++b) {
      bool quad[2][2] = {{false, false}, {false, false}};
      for (const auto& v : verts_) quad[v.get(a)][v.get(b)] = true;
      int missing = 0, ma = 0, mb = 0;
      for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb)
          if (!quad[sa][sb]) {
            ++missing;
            ma = sa;
            mb = sb;
          }
      if (missing == 0) {
        q.setRel(a, b, Rel{RelKind::transverse, Side::plus, Side::plus});
      } else if (missing == 1) {
        // Quadrant (ma, mb) empty: a^{ma} subset of b^{!mb}.
        q.setRel(a, b, Rel{RelKind::nested, ma ? Side::plus : Side::minus,
                           mb ? Side::minus : Side::plus});
      } else {
        throw DomainError("duality: hyperplane " + p_.name(a) + " or " + p_.name(b) +
                          " has an empty side");
      }
    }
  return q;
}

}  // namespace cubical
