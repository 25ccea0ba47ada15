#include "cubical/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubical {

namespace {

using Int = boost::multiprecision::cpp_int;

bool subsetOf(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Exact rank of an integer matrix by fraction-free elimination.
long rankQ(std::vector<std::vector<Int>> m) {
  if (m.empty() || m[0].empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

long rankGF2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
  long rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t w = c >> 6, bit = c & 63;
    std::size_t piv = r;
    while (piv < rows.size() && !((rows[piv][w] >> bit) & 1)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i][w] >> bit) & 1))
        for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] ^= rows[r][k];
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<int> SimplicialComplex::vertexByLabel(const std::string& l) const {
  for (int v = 0; v < vertexCount(); ++v)
    if (labels_[v] == l) return v;
  return std::nullopt;
}

int SimplicialComplex::addVertex(const std::string& label) {
  labels_.push_back(label);
  return vertexCount() - 1;
}

void SimplicialComplex::addFace(std::vector<int> face) {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  if (face.empty()) return;
  for (int v : face)
    if (v < 0 || v >= vertexCount()) throw DomainError("addFace: vertex out of range");
  for (const auto& m : maximal_)
    if (subsetOf(face, m)) return;
  for (auto it = maximal_.begin(); it != maximal_.end();)
    if (subsetOf(*it, face)) it = maximal_.erase(it);
    else ++it;
  maximal_.insert(std::move(face));
}

bool SimplicialComplex::hasFace(std::vector<int> face) const {
  std::sort(face.begin(), face.end());
  for (const auto& m : maximal_)
    if (subsetOf(face, m)) return true;
  return false;
}

std::vector<std::vector<std::vector<int>>> SimplicialComplex::facesByDim(
    std::size_t faceCap) const {
  std::set<std::vector<int>> all;
  std::function<void(const std::vector<int>&)> addAll = [&](const std::vector<int>& f) {
    if (f.empty() || all.count(f)) return;
    if (all.size() >= faceCap) throw ResourceError("face enumeration exceeded the cap");
    all.insert(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<int> sub = f;
      sub.erase(sub.begin() + static_cast<long>(i));
      addAll(sub);
    }
  };
  for (const auto& m : maximal_) addAll(m);
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& f : all) {
    if (out.size() < f.size()) out.resize(f.size());
    out[f.size() - 1].push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& m : maximal_) d = std::max(d, static_cast<int>(m.size()) - 1);
  return d;
}

SimplicialComplex SimplicialComplex::fullSubcomplex(const std::set<int>& verts) const {
  SimplicialComplex s(labels_);
  for (const auto& m : maximal_) {
    std::vector<int> kept;
    for (int v : m)
      if (verts.count(v)) kept.push_back(v);
    if (!kept.empty()) s.addFace(kept);
  }
  return s;
}

std::set<int> SimplicialComplex::vertexSet() const {
  std::set<int> out;
  for (const auto& m : maximal_) out.insert(m.begin(), m.end());
  return out;
}

bool SimplicialComplex::isConeWithApex(int apex) const {
  if (maximal_.empty()) return false;
  for (const auto& m : maximal_)
    if (!std::binary_search(m.begin(), m.end(), apex)) return false;
  return true;
}

std::optional<int> SimplicialComplex::coneApex() const {
  for (int v : vertexSet())
    if (isConeWithApex(v)) return v;
  return std::nullopt;
}

std::vector<long> SimplicialComplex::betti(bool mod2) const {
  auto faces = facesByDim();
  if (faces.empty()) return {};
  int dim = static_cast<int>(faces.size()) - 1;
  // Index map per dimension.
  std::vector<std::map<std::vector<int>, std::size_t>> idx(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d)
    for (std::size_t i = 0; i < faces[d].size(); ++i) idx[d][faces[d][i]] = i;
  std::vector<long> ranks(faces.size() + 1, 0);  // ranks[d] = rank of boundary C_d -> C_{d-1}
  for (int d = 1; d <= dim; ++d) {
    std::size_t rows = faces[d].size(), cols = faces[d - 1].size();
    if (rows == 0 || cols == 0) continue;
    if (mod2) {
      std::vector<std::vector<std::uint64_t>> m(rows,
                                                std::vector<std::uint64_t>((cols + 63) / 64, 0));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < faces[d][i].size(); ++k) {
          std::vector<int> sub = faces[d][i];
          sub.erase(sub.begin() + static_cast<long>(k));
          std::size_t j = idx[d - 1][sub];
          m[i][j >> 6] ^= (1ull << (j & 63));
        }
      ranks[d] = rankGF2(std::move(m), cols);
    } else {
      std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols, 0));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < faces[d][i].size(); ++k) {
          std::vector<int> sub = faces[d][i];
          sub.erase(sub.begin() + static_cast<long>(k));
          m[i][idx[d - 1][sub]] = (k % 2 == 0) ? 1 : -1;
        }
      ranks[d] = rankQ(std::move(m));
    }
  }
  std::vector<long> b(faces.size());
  for (int d = 0; d <= dim; ++d)
    b[d] = static_cast<long>(faces[d].size()) - ranks[d] - ranks[d + 1];
  return b;
}

SimplicialComplex::Collapse SimplicialComplex::collapseCertificate(std::uint64_t seed,
                                                                  int restarts) const {
  for (int attempt = 0; attempt < restarts; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    auto byDim = facesByDim();
    std::set<std::vector<int>> live;
    for (const auto& dimFaces : byDim)
      for (const auto& f : dimFaces) live.insert(f);
    Collapse c;
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<std::pair<std::vector<int>, std::vector<int>>> freePairs;
      for (const auto& f : live) {
        std::vector<std::vector<int>> cofaces;
        for (const auto& g : live)
          if (g.size() == f.size() + 1 && subsetOf(f, g)) cofaces.push_back(g);
        if (cofaces.size() == 1) freePairs.emplace_back(f, cofaces[0]);
      }
      if (!freePairs.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, freePairs.size() - 1);
        auto [f, g] = freePairs[pick(rng)];
        live.erase(f);
        live.erase(g);
        c.steps.emplace_back(f, g);
        progress = true;
      }
    }
    if (live.size() == 1 && live.begin()->size() == 1) {
      c.collapsed = true;
      return c;
    }
  }
  return Collapse{};
}

bool SimplicialComplex::verifyCollapse(const Collapse& c) const {
  if (!c.collapsed) return false;
  auto byDim = facesByDim();
  std::set<std::vector<int>> live;
  for (const auto& dimFaces : byDim)
    for (const auto& f : dimFaces) live.insert(f);
  for (const auto& [f, g] : c.steps) {
    if (!live.count(f) || !live.count(g)) return false;
    if (g.size() != f.size() + 1 || !subsetOf(f, g)) return false;
    for (const auto& h : live)
      if (h != g && h.size() == f.size() + 1 && subsetOf(f, h)) return false;
    live.erase(f);
    live.erase(g);
  }
  return live.size() == 1 && live.begin()->size() == 1;
}

SimplicialComplex orderComplex(const std::vector<std::string>& labels,
                               const std::vector<std::vector<char>>& less) {
  int n = static_cast<int>(labels.size());
  SimplicialComplex s(labels);
  // Strictness and transitivity sanity.
  for (int a = 0; a < n; ++a) {
    if (less[a][a]) throw DomainError("orderComplex: relation not irreflexive");
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (less[a][b] && less[b][c] && !less[a][c])
          throw DomainError("orderComplex: relation not transitive");
  }
  std::vector<int> chain;
  std::function<void(int)> rec = [&](int last) {
    bool extended = false;
    for (int b = 0; b < n; ++b)
      if (less[last][b]) {
        chain.push_back(b);
        rec(b);
        chain.pop_back();
        extended = true;
      }
    if (!extended) s.addFace(chain);
  };
  for (int a = 0; a < n; ++a) {
    chain.assign(1, a);
    rec(a);
  }
  return s;
}

SimplicialComplex nerveOfVertexSets(const std::vector<std::string>& pieceLabels,
                                    const std::vector<std::set<int>>& pieces) {
  SimplicialComplex nerve(pieceLabels);
  std::set<int> ambient;
  for (const auto& p : pieces) ambient.insert(p.begin(), p.end());
  for (int v : ambient) {
    std::vector<int> touching;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (pieces[i].count(v)) touching.push_back(static_cast<int>(i));
    if (!touching.empty()) nerve.addFace(touching);
  }
  return nerve;
}

namespace {

std::string faceLabel(const SimplicialComplex& s, const std::vector<int>& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += s.label(f[i]);
  }
  return out + "}";
}

SimplicialComplex chainsComplex(const SimplicialComplex& ambient,
                                const std::vector<std::vector<int>>& nodes) {
  std::vector<std::string> labels;
  for (const auto& f : nodes) labels.push_back(faceLabel(ambient, f));
  int n = static_cast<int>(nodes.size());
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && nodes[a].size() < nodes[b].size() && subsetOf(nodes[a], nodes[b]))
        less[a][b] = 1;
  return orderComplex(labels, less);
}

}  // namespace

SimplicialComplex barycentric(const SimplicialComplex& s) {
  auto byDim = s.facesByDim();
  std::vector<std::vector<int>> nodes;
  for (const auto& dimFaces : byDim)
    for (const auto& f : dimFaces) nodes.push_back(f);
  return chainsComplex(s, nodes);
}

SimplicialComplex complementaryComplex(const SimplicialComplex& ambient,
                                       const std::set<std::vector<int>>& sigma) {
  auto byDim = ambient.facesByDim();
  std::vector<std::vector<int>> nodes;
  for (const auto& dimFaces : byDim)
    for (const auto& f : dimFaces)
      if (!sigma.count(f)) nodes.push_back(f);
  return chainsComplex(ambient, nodes);
}

bool openComplementsIntersect(const SimplicialComplex& ambient,
                              const std::vector<std::set<std::vector<int>>>& sigmas) {
  for (const auto& s : sigmas)
    if (s.empty()) return false;
  // A common point of the open complements exists iff some chain of ambient
  // faces meets every sigma: pick one face per sigma, pairwise comparable.
  std::vector<std::vector<int>> picked;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == sigmas.size()) return true;
    for (const auto& f : sigmas[i]) {
      bool ok = true;
      for (const auto& g : picked)
        if (!subsetOf(f, g) && !subsetOf(g, f)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      picked.push_back(f);
      if (rec(i + 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  (void)ambient;
  return rec(0);
}

bool closedPiecesIntersect(const std::vector<std::set<std::vector<int>>>& sigmas) {
  if (sigmas.empty()) return false;
  std::set<int> common;
  bool first = true;
  for (const auto& s : sigmas) {
    std::set<int> verts;
    for (const auto& f : s) verts.insert(f.begin(), f.end());
    if (first) {
      common = verts;
      first = false;
    } else {
      std::set<int> inter;
      for (int v : common)
        if (verts.count(v)) inter.insert(v);
      common = inter;
    }
  }
  return !common.empty();
}

}  // namespace cubical
