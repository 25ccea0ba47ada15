#include "cubical/metric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

namespace cubical {

namespace {

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

std::pair<double, double> validateRescaling(const CubeComplex& x, const Rescaling& rho) {
  double m = 1, M = 1;
  bool any = false;
  for (int h = 0; h < x.hyperplanes(); ++h) {
    double l = rho.at(h);
    if (!(l > 0)) throw DomainError("rescaling: non-positive length for " + x.pocset().name(h));
    if (!any) {
      m = M = l;
      any = true;
    }
    m = std::min(m, l);
    M = std::max(M, l);
  }
  return {m, M};
}

MetricGeometry::MetricGeometry(const CubeComplex& x, Rescaling rho)
    : x_(x), rho_(std::move(rho)) {
  validateRescaling(x, rho_);
  const FinitePocset& p = x.pocset();
  chainOf_.assign(p.size(), -1);
  dir_.assign(p.size(), Side::plus);
  // Walls sharing a coordinate must be arrangeable on a line: pairwise
  // non-transverse and no facing triple among them.  For a nested pair the
  // unique disjoint side pair is (a_side, opposite(b_side)).
  auto disjointSides = [&](int a, int b) {
    Rel r = p.rel(a, b);
    return std::pair<Side, Side>(r.a_side, opposite(r.b_side));
  };
  std::vector<std::vector<int>> chains;
  for (int h = 0; h < p.size(); ++h) {
    int placed = -1;
    for (std::size_t c = 0; c < chains.size() && placed < 0; ++c) {
      bool ok = true;
      for (int k : chains[c])
        if (p.transverse(h, k)) ok = false;
      for (std::size_t i = 0; ok && i < chains[c].size(); ++i)
        for (std::size_t j = i + 1; ok && j < chains[c].size(); ++j) {
          int u = chains[c][i], v = chains[c][j];
          auto [su, sv] = disjointSides(u, v);
          auto [su2, sh] = disjointSides(u, h);
          auto [sv2, sh2] = disjointSides(v, h);
          if (su == su2 && sv == sv2 && sh == sh2) ok = false;
        }
      if (ok) placed = static_cast<int>(c);
    }
    if (placed < 0) {
      chains.push_back({});
      placed = static_cast<int>(chains.size()) - 1;
    }
    chains[placed].push_back(h);
    chainOf_[h] = placed;
  }
  chains_ = static_cast<int>(chains.size());
  // Orient each wall so the chosen half-spaces of a chain are totally
  // ordered by inclusion: relative to the first wall's plus side, a wall to
  // the right keeps the side nested inside it, a wall to the left the side
  // containing it.
  for (const auto& chain : chains) {
    int h0 = chain[0];
    dir_[h0] = Side::plus;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      Rel r = p.rel(chain[i], h0);  // chain[i]^{a_side} subset of h0^{b_side}
      dir_[chain[i]] = r.b_side == Side::plus ? r.a_side : opposite(r.a_side);
    }
  }
  offset_.assign(p.size(), 0.0);
  // Axis boxes of the maximal cubes.
  for (const auto& cube : x.maximalCubes()) {
    Box b;
    b.lo = embed(cube.corner);
    b.hi = b.lo;
    for (int a : cube.axes) {
      if (x.vertex(cube.corner).side(a) == dir_[a])
        b.lo[chainOf_[a]] -= rho_.at(a);
      else
        b.hi[chainOf_[a]] += rho_.at(a);
    }
    boxes_.push_back(b);
  }
}

std::vector<double> MetricGeometry::embed(std::size_t v) const {
  std::vector<double> out(chains_, 0.0);
  const Orientation& o = x_.vertex(v);
  for (int h = 0; h < x_.hyperplanes(); ++h)
    if (o.side(h) == dir_[h]) out[chainOf_[h]] += rho_.at(h);
  return out;
}

bool MetricGeometry::pointInBox(const std::vector<double>& p, const Box& box,
                                double tol) const {
  for (int c = 0; c < chains_; ++c)
    if (p[c] < box.lo[c] - tol || p[c] > box.hi[c] + tol) return false;
  return true;
}

bool MetricGeometry::segmentInside(const std::vector<double>& a,
                                   const std::vector<double>& b) const {
  // Coverage of [0,1] by the parameter intervals each box admits.
  std::vector<std::pair<double, double>> ivs;
  for (const auto& box : boxes_) {
    double t0 = 0, t1 = 1;
    bool ok = true;
    for (int c = 0; c < chains_ && ok; ++c) {
      double d = b[c] - a[c];
      double lo = box.lo[c] - 1e-9, hi = box.hi[c] + 1e-9;
      if (std::fabs(d) < 1e-12) {
        if (a[c] < lo || a[c] > hi) ok = false;
      } else {
        double u0 = (lo - a[c]) / d, u1 = (hi - a[c]) / d;
        if (u0 > u1) std::swap(u0, u1);
        t0 = std::max(t0, u0);
        t1 = std::min(t1, u1);
        if (t0 > t1) ok = false;
      }
    }
    if (ok && t1 >= t0) ivs.emplace_back(t0, t1);
  }
  std::sort(ivs.begin(), ivs.end());
  double covered = 0;
  for (auto& [s, e] : ivs) {
    if (s > covered + 1e-9) return false;
    covered = std::max(covered, e);
    if (covered >= 1 - 1e-9) return true;
  }
  return covered >= 1 - 1e-9;
}

MetricGeometry::Estimate MetricGeometry::distance(std::size_t a, std::size_t b, double tol,
                                                  int levelCap) const {
  Estimate est;
  std::vector<double> pa = embed(a), pb = embed(b);
  if (a == b) return est;
  if (segmentInside(pa, pb)) {
    est.distance = est.gridEstimate = dist(pa, pb);
    est.exactShortcut = true;
    return est;
  }
  // Grid search, refining by a factor of two per level.
  using Key = std::vector<long long>;
  auto keyOf = [&](const std::vector<double>& p) {
    Key k(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) k[i] = llround(p[i] * 1e7);
    return k;
  };
  double prev = -1;
  std::vector<std::vector<double>> pathPoints;
  int maxLevel = std::min(levelCap, chains_ >= 3 ? 2 : 3);
  for (int level = 1; level <= maxLevel; ++level) {
    long n = 1l << level;
    std::map<Key, int> nodeIdx;
    std::vector<std::vector<double>> pts;
    std::vector<std::vector<int>> boxNodes(boxes_.size());
    for (std::size_t bi = 0; bi < boxes_.size(); ++bi) {
      const Box& box = boxes_[bi];
      std::vector<std::vector<double>> grid{{}};
      for (int c = 0; c < chains_; ++c) {
        std::vector<std::vector<double>> next;
        long steps = box.hi[c] > box.lo[c] + 1e-12 ? n : 0;
        for (auto& g : grid)
          for (long i = 0; i <= steps; ++i) {
            auto g2 = g;
            double v = steps ? box.lo[c] + (box.hi[c] - box.lo[c]) * i / steps : box.lo[c];
            g2.push_back(v);
            next.push_back(g2);
          }
        grid = std::move(next);
      }
      for (auto& p : grid) {
        Key k = keyOf(p);
        auto it = nodeIdx.find(k);
        int id;
        if (it == nodeIdx.end()) {
          id = static_cast<int>(pts.size());
          nodeIdx[k] = id;
          pts.push_back(p);
        } else {
          id = it->second;
        }
        boxNodes[bi].push_back(id);
      }
    }
    auto ita = nodeIdx.find(keyOf(pa));
    auto itb = nodeIdx.find(keyOf(pb));
    if (ita == nodeIdx.end() || itb == nodeIdx.end())
      throw DomainError("metric: endpoint is not a cell corner");
    // Dijkstra with straight moves inside each box.
    std::vector<std::vector<int>> nodeBoxes(pts.size());
    for (std::size_t bi = 0; bi < boxes_.size(); ++bi)
      for (int id : boxNodes[bi]) nodeBoxes[id].push_back(static_cast<int>(bi));
    std::vector<double> d(pts.size(), 1e18);
    std::vector<int> from(pts.size(), -1);
    std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                        std::greater<>> pq;
    d[ita->second] = 0;
    pq.push({0, ita->second});
    while (!pq.empty()) {
      auto [dv, v] = pq.top();
      pq.pop();
      if (dv > d[v] + 1e-15) continue;
      for (int bi : nodeBoxes[v])
        for (int w : boxNodes[bi]) {
          double nd = dv + dist(pts[v], pts[w]);
          if (nd + 1e-15 < d[w]) {
            d[w] = nd;
            from[w] = v;
            pq.push({nd, w});
          }
        }
    }
    if (d[itb->second] >= 1e17) throw DomainError("metric: endpoints not connected");
    est.gridEstimate = d[itb->second];
    est.levels = level;
    pathPoints.clear();
    for (int v = itb->second; v != -1; v = from[v]) pathPoints.push_back(pts[v]);
    std::reverse(pathPoints.begin(), pathPoints.end());
    if (prev >= 0 && std::fabs(prev - est.gridEstimate) < tol) break;
    prev = est.gridEstimate;
  }
  // Touring refinement: optimize the crossing points along the box
  // sequence of the grid path.
  std::vector<int> seq;
  for (std::size_t i = 0; i + 1 < pathPoints.size(); ++i) {
    int found = -1;
    for (std::size_t bi = 0; bi < boxes_.size() && found < 0; ++bi)
      if (pointInBox(pathPoints[i], boxes_[bi], 1e-7) &&
          pointInBox(pathPoints[i + 1], boxes_[bi], 1e-7))
        found = static_cast<int>(bi);
    if (found < 0) throw DomainError("metric: grid path leaves the complex");
    if (seq.empty() || seq.back() != found) seq.push_back(found);
  }
  if (seq.empty()) {
    est.distance = est.gridEstimate;
    return est;
  }
  // Interfaces between consecutive boxes.
  std::vector<Box> faces;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    Box f;
    f.lo.resize(chains_);
    f.hi.resize(chains_);
    for (int c = 0; c < chains_; ++c) {
      f.lo[c] = std::max(boxes_[seq[i]].lo[c], boxes_[seq[i + 1]].lo[c]);
      f.hi[c] = std::min(boxes_[seq[i]].hi[c], boxes_[seq[i + 1]].hi[c]);
      if (f.lo[c] > f.hi[c] + 1e-9) throw DomainError("metric: disconnected box sequence");
      f.hi[c] = std::max(f.hi[c], f.lo[c]);
    }
    faces.push_back(f);
  }
  std::vector<std::vector<double>> q;
  for (const auto& f : faces) {
    std::vector<double> mid(chains_);
    for (int c = 0; c < chains_; ++c) mid[c] = (f.lo[c] + f.hi[c]) / 2;
    q.push_back(mid);
  }
  auto total = [&]() {
    double s = 0;
    const std::vector<double>* prevP = &pa;
    for (const auto& p : q) {
      s += dist(*prevP, p);
      prevP = &p;
    }
    return s + dist(*prevP, pb);
  };
  double cur = total();
  for (int pass = 0; pass < 2000; ++pass) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      const std::vector<double>& before = i == 0 ? pa : q[i - 1];
      const std::vector<double>& after = i + 1 == q.size() ? pb : q[i + 1];
      for (int c = 0; c < chains_; ++c) {
        double lo = faces[i].lo[c], hi = faces[i].hi[c];
        if (hi - lo < 1e-12) {
          q[i][c] = lo;
          continue;
        }
        auto f = [&](double v) {
          double old = q[i][c];
          q[i][c] = v;
          double r = dist(before, q[i]) + dist(q[i], after);
          q[i][c] = old;
          return r;
        };
        for (int it = 0; it < 80; ++it) {
          double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
          if (f(m1) < f(m2)) hi = m2;
          else lo = m1;
        }
        q[i][c] = (lo + hi) / 2;
      }
    }
    double next = total();
    if (cur - next < 1e-12) {
      cur = next;
      break;
    }
    cur = next;
  }
  est.distance = std::min(cur, est.gridEstimate);
  return est;
}

double MetricGeometry::wallLength(std::size_t a, std::size_t b) const {
  double s = 0;
  for (int h : x_.separators(a, b)) s += rho_.at(h);
  return s;
}

MetricGeometry::WallFit MetricGeometry::wallCountCheck(double tol, std::size_t pairCap) const {
  WallFit fit;
  std::size_t n = x_.vertexCount();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (fit.pairs >= pairCap) break;
      double w = wallLength(a, b);
      double d = distance(a, b, std::max(tol, 1e-4), 4).distance;
      if (d <= 0 || w <= 0) throw DomainError("wall count check: degenerate pair");
      fit.maxRatioWallOverMetric = std::max(fit.maxRatioWallOverMetric, w / d);
      fit.maxRatioMetricOverWall = std::max(fit.maxRatioMetricOverWall, d / w);
      ++fit.pairs;
    }
  fit.lambda0 = std::max({1.0, fit.maxRatioWallOverMetric, fit.maxRatioMetricOverWall});
  return fit;
}

}  // namespace cubical
