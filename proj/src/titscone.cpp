#include "cubical/titscone.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "cubical/tiered.hpp"

namespace cubical {

namespace {

constexpr double kTol = 1e-9;

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec normalize(const Vec& a) {
  double n = norm(a);
  if (n < kTol) throw DomainError("cannot normalize a near-zero direction");
  Vec out{};
  for (int i = 0; i < 4; ++i) out[i] = a[i] / n;
  return out;
}

// Row vector of the linear form of a constraint (a . x >= 0 or a . x = 0).
Vec constraintRow(const ConeConstraint& c) {
  Vec r{};
  switch (c.kind) {
    case ConeConstraint::Kind::nonneg: r[c.i] = 1; break;
    case ConeConstraint::Kind::ge: r[c.i] = 1; r[c.j] = -1; break;
    case ConeConstraint::Kind::zero: r[c.i] = 1; break;
  }
  return r;
}

int matrixRank(std::vector<Vec> rows, int dim) {
  int rank = 0;
  for (int c = 0; c < dim && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    double best = 1e-7;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (std::fabs(rows[r][c]) > best) {
        best = std::fabs(rows[r][c]);
        piv = r;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      double f = rows[r][c] / rows[rank][c];
      for (int k = 0; k < dim; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// One-dimensional nullspace of the rows, if the rank is dim - 1.
std::optional<Vec> nullspace1(const std::vector<Vec>& rows, int dim) {
  if (matrixRank(rows, dim) != dim - 1) return std::nullopt;
  // Try each coordinate pinned to 1 and solve the rest by elimination.
  for (int free = 0; free < dim; ++free) {
    std::vector<Vec> m = rows;
    std::vector<double> rhs(m.size(), 0.0);
    for (std::size_t r = 0; r < m.size(); ++r) {
      rhs[r] = -m[r][free];
      m[r][free] = 0;
    }
    // Solve m x = rhs over the remaining dim-1 coordinates.
    std::vector<int> cols;
    for (int c = 0; c < dim; ++c)
      if (c != free) cols.push_back(c);
    std::vector<std::vector<double>> a(m.size(), std::vector<double>(cols.size() + 1, 0.0));
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) a[r][c] = m[r][cols[c]];
      a[r][cols.size()] = rhs[r];
    }
    int rank = 0;
    std::vector<int> pivCol(cols.size(), -1);
    for (std::size_t c = 0; c < cols.size() && rank < static_cast<int>(a.size()); ++c) {
      int piv = -1;
      double best = 1e-7;
      for (int r = rank; r < static_cast<int>(a.size()); ++r)
        if (std::fabs(a[r][c]) > best) {
          best = std::fabs(a[r][c]);
          piv = r;
        }
      if (piv < 0) continue;
      std::swap(a[rank], a[piv]);
      for (int r = 0; r < static_cast<int>(a.size()); ++r) {
        if (r == rank) continue;
        double f = a[r][c] / a[rank][c];
        for (std::size_t k = 0; k <= cols.size(); ++k) a[r][k] -= f * a[rank][k];
      }
      pivCol[c] = rank;
      ++rank;
    }
    if (rank != static_cast<int>(cols.size())) continue;  // free coord not independent
    bool solvable = true;
    for (int r = rank; r < static_cast<int>(a.size()); ++r)
      if (std::fabs(a[r][cols.size()]) > 1e-7) solvable = false;
    if (!solvable) continue;
    Vec x{};
    x[free] = 1;
    for (std::size_t c = 0; c < cols.size(); ++c)
      x[cols[c]] = a[pivCol[c]][cols.size()] / a[pivCol[c]][c];
    return x;
  }
  return std::nullopt;
}

}  // namespace

bool CubicalCone::sectorContains(std::size_t s, const Vec& x, double tol) const {
  for (const auto& c : sectors[s]) {
    Vec r = constraintRow(c);
    double v = dot(r, x);
    if (c.kind == ConeConstraint::Kind::zero) {
      if (std::fabs(v) > tol) return false;
    } else if (v < -tol) {
      return false;
    }
  }
  return true;
}

bool CubicalCone::contains(const Vec& x, double tol) const {
  for (std::size_t s = 0; s < sectors.size(); ++s)
    if (sectorContains(s, x, tol)) return true;
  return false;
}

double arcDistance(const Vec& a, const Vec& b) {
  double c = dot(normalize(a), normalize(b));
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

TitsCone::TitsCone(const CubicalCone& c) : c_(c) {
  if (c_.dim < 1 || c_.dim > 4) throw DomainError("cone dimension must be between 1 and 4");
  if (c_.sectors.empty()) throw DomainError("cone has no constraint sectors");
  for (const auto& sec : c_.sectors)
    for (const auto& con : sec)
      if (con.i < 0 || con.i >= c_.dim || con.j < 0 || con.j >= c_.dim)
        throw DomainError("cone constraint references a bad coordinate");
}

std::vector<Vec> TitsCone::sectorRays(std::size_t s, const InfinityPattern& keep) const {
  int d = c_.dim;
  std::vector<Vec> eq, ineq;
  for (const auto& con : c_.sectors[s]) {
    Vec r = constraintRow(con);
    if (con.kind == ConeConstraint::Kind::zero) eq.push_back(r);
    else ineq.push_back(r);
  }
  for (int i = 0; i < d; ++i)
    if (!keep.count(i)) {
      Vec r{};
      r[i] = 1;
      eq.push_back(r);
    }
  auto feasible = [&](const Vec& x) {
    for (const auto& r : eq)
      if (std::fabs(dot(r, x)) > 1e-7) return false;
    for (const auto& r : ineq)
      if (dot(r, x) < -1e-7) return false;
    return true;
  };
  std::vector<Vec> rays;
  auto push = [&](Vec v) {
    v = normalize(v);
    for (const auto& w : rays)
      if (arcDistance(v, w) < 1e-6) return;
    rays.push_back(v);
  };
  int m = static_cast<int>(ineq.size());
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    std::vector<Vec> rows = eq;
    for (int i : pick) rows.push_back(ineq[i]);
    if (auto ns = nullspace1(rows, d)) {
      for (int sign : {1, -1}) {
        Vec v{};
        for (int i = 0; i < d; ++i) v[i] = sign * (*ns)[i];
        if (norm(v) > kTol && feasible(v)) {
          // Extremality: the tight constraints at v must have rank d-1.
          std::vector<Vec> tight = eq;
          for (const auto& r : ineq)
            if (std::fabs(dot(r, v)) < 1e-7 * norm(v)) tight.push_back(r);
          if (matrixRank(tight, d) == d - 1) {
            Vec neg{};
            for (int i = 0; i < d; ++i) neg[i] = -v[i];
            if (feasible(neg)) throw DomainError("cone sector is not pointed");
            push(v);
          }
        }
      }
    }
    for (int i = start; i < m; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return rays;
}

SphericalPolytope TitsCone::realization(const InfinityPattern& v) const {
  SphericalPolytope q;
  for (std::size_t s = 0; s < c_.sectors.size(); ++s)
    for (const auto& r : sectorRays(s, v)) {
      bool dup = false;
      for (const auto& w : q.vertices)
        if (arcDistance(r, w) < 1e-6) dup = true;
      if (!dup) {
        q.vertices.push_back(r);
        q.sectorOf.push_back(s);
      }
    }
  return q;
}

InfinityPattern TitsCone::deepSet(const Vec& dir, double tol) const {
  if (!c_.contains(dir, 1e-6)) throw DomainError("direction is not in the cone");
  InfinityPattern out;
  double n = norm(dir);
  for (int i = 0; i < c_.dim; ++i)
    if (dir[i] > tol * std::max(1.0, n)) out.insert(i);
  return out;
}

InfinityPattern TitsCone::maximalPatternIn(const InfinityPattern& v) const {
  std::vector<InfinityPattern> supports;
  for (std::size_t s = 0; s < c_.sectors.size(); ++s) {
    auto rays = sectorRays(s, v);
    if (rays.empty()) continue;
    Vec centroid{};
    for (const auto& r : rays)
      for (int i = 0; i < 4; ++i) centroid[i] += r[i];
    InfinityPattern sup;
    for (int i = 0; i < c_.dim; ++i)
      if (centroid[i] > 1e-9) sup.insert(i);
    supports.push_back(sup);
  }
  if (supports.empty()) throw DomainError("empty realization has no maximal pattern");
  for (const auto& cand : supports) {
    bool top = true;
    for (const auto& other : supports)
      if (!std::includes(cand.begin(), cand.end(), other.begin(), other.end())) top = false;
    if (top) return cand;
  }
  throw DomainError("realization has no unique maximal pattern");
}

bool TitsCone::visible(const InfinityPattern& v) const {
  auto q = realization(v);
  if (q.empty()) return false;
  return maximalPatternIn(v) == v;
}

std::vector<InfinityPattern> TitsCone::patterns() const {
  std::vector<InfinityPattern> out;
  for (unsigned mask = 1; mask < (1u << c_.dim); ++mask) {
    InfinityPattern s;
    for (int i = 0; i < c_.dim; ++i)
      if ((mask >> i) & 1) s.insert(i);
    auto q = realization(s);
    if (q.empty()) continue;
    // The pattern must itself occur as a support of a direction.
    bool occurs = false;
    try {
      occurs = maximalPatternIn(s) == s;
    } catch (const DomainError&) {
      occurs = false;
    }
    if (!occurs) {
      // A sub-sector may still realize s exactly even when the overall
      // maximal support is larger.
      for (std::size_t sec = 0; sec < c_.sectors.size() && !occurs; ++sec) {
        auto rays = sectorRays(sec, s);
        if (rays.empty()) continue;
        Vec centroid{};
        for (const auto& r : rays)
          for (int i = 0; i < 4; ++i) centroid[i] += r[i];
        InfinityPattern sup;
        for (int i = 0; i < c_.dim; ++i)
          if (centroid[i] > 1e-9) sup.insert(i);
        if (sup == s) occurs = true;
      }
    }
    if (occurs) out.push_back(s);
  }
  return out;
}

std::vector<InfinityPattern> TitsCone::visiblePatterns() const {
  std::vector<InfinityPattern> out;
  for (const auto& p : patterns())
    if (visible(p)) out.push_back(p);
  return out;
}

std::vector<InfinityPattern> TitsCone::maxVisiblePatterns() const {
  auto vis = visiblePatterns();
  std::vector<InfinityPattern> out;
  for (const auto& v : vis) {
    bool maximal = true;
    for (const auto& w : vis)
      if (v != w && std::includes(w.begin(), w.end(), v.begin(), v.end())) maximal = false;
    if (maximal) out.push_back(v);
  }
  return out;
}

double TitsCone::diameter(const SphericalPolytope& q) const {
  double d = 0;
  for (std::size_t a = 0; a < q.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < q.vertices.size(); ++b)
      d = std::max(d, arcDistance(q.vertices[a], q.vertices[b]));
  return d;
}

TitsCone::Center TitsCone::circumcenter(const SphericalPolytope& q, int iters,
                                        double tol) const {
  (void)iters;
  if (q.empty()) throw DomainError("circumcenter of an empty polytope");
  auto radiusAt = [&](const Vec& p) {
    double r = 0;
    for (const auto& v : q.vertices) r = std::max(r, arcDistance(p, v));
    return r;
  };
  // The minimax center is equidistant from its support vertices and lies in
  // their linear span; enumerate every candidate support subset, solve the
  // equidistance system in span coordinates, and keep the best candidate.
  std::size_t n = q.vertices.size();
  Vec best = q.vertices[0];
  double bestR = radiusAt(best);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vec> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.push_back(q.vertices[i]);
    std::size_t k = s.size();
    if (k > 5) continue;
    // p = sum c_j s_j with (s_j - s_0) . p = 0 for all j: one homogeneous
    // linear system in the c_j, generically a line of solutions.
    std::vector<std::vector<double>> m(k - 1, std::vector<double>(k, 0.0));
    for (std::size_t r = 0; r + 1 < k; ++r)
      for (std::size_t cIdx = 0; cIdx < k; ++cIdx)
        m[r][cIdx] = dot(s[r + 1], s[cIdx]) - dot(s[0], s[cIdx]);
    // Gaussian elimination for a nullspace vector.
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < m.size(); ++col) {
      std::size_t pr = row;
      for (std::size_t r2 = row; r2 < m.size(); ++r2)
        if (std::abs(m[r2][col]) > std::abs(m[pr][col])) pr = r2;
      if (std::abs(m[pr][col]) < 1e-12) continue;
      std::swap(m[row], m[pr]);
      for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
        if (r2 == row) continue;
        double f = m[r2][col] / m[row][col];
        for (std::size_t c2 = 0; c2 < k; ++c2) m[r2][c2] -= f * m[row][c2];
      }
      pivots.push_back(col);
      ++row;
    }
    if (pivots.size() + 1 != k) continue;  // no unique direction
    std::size_t freeCol = 0;
    while (std::find(pivots.begin(), pivots.end(), freeCol) != pivots.end()) ++freeCol;
    std::vector<double> coef(k, 0.0);
    coef[freeCol] = 1.0;
    for (std::size_t r2 = 0; r2 < pivots.size(); ++r2)
      coef[pivots[r2]] = -m[r2][freeCol] / m[r2][pivots[r2]];
    Vec p{};
    for (std::size_t j = 0; j < k; ++j)
      for (int i = 0; i < 4; ++i) p[i] += coef[j] * s[j][i];
    double pn = norm(p);
    if (pn < 1e-12) continue;
    if (dot(p, s[0]) < 0)
      for (int i = 0; i < 4; ++i) p[i] = -p[i];
    p = normalize(p);
    double r = radiusAt(p);
    if (r < bestR) {
      bestR = r;
      best = p;
    }
  }
  return Center{best, bestR};
}

Vec TitsCone::pseudocenter(const InfinityPattern& v) const {
  auto q = realization(v);
  if (q.empty()) throw DomainError("pseudocenter of an empty realization");
  auto chi = circumcenter(q);
  InfinityPattern mv = maximalPatternIn(v);
  Vec centroid{};
  for (const auto& r : q.vertices)
    for (int i = 0; i < 4; ++i) centroid[i] += r[i];
  centroid = normalize(centroid);
  double bound = M_PI / 4 - chi.radius / 2 + 1e-9;
  for (double t = 0.0; t <= 1.0 + 1e-12; t += 0.02) {
    Vec p{};
    for (int i = 0; i < 4; ++i) p[i] = (1 - t) * chi.point[i] + t * centroid[i];
    if (norm(p) < kTol) continue;
    p = normalize(p);
    if (deepSet(p, 1e-9) == mv && arcDistance(p, chi.point) <= bound) return p;
  }
  throw DomainError("no pseudocenter within the required ball");
}

bool TitsCone::realizationsIntersect(const std::vector<InfinityPattern>& vs) const {
  if (vs.empty()) return false;
  InfinityPattern common = vs[0];
  for (const auto& v : vs) {
    InfinityPattern inter;
    for (int i : common)
      if (v.count(i)) inter.insert(i);
    common = inter;
  }
  if (common.empty()) return false;
  return !realization(common).empty();
}

SimplicialComplex TitsCone::visibilityNerve() const {
  auto maxVis = maxVisiblePatterns();
  std::vector<std::string> labels;
  for (const auto& v : maxVis) labels.push_back(patternString(v));
  SimplicialComplex nerve(labels);
  int n = static_cast<int>(maxVis.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<InfinityPattern> sel;
    std::vector<int> face;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        sel.push_back(maxVis[i]);
        face.push_back(i);
      }
    if (realizationsIntersect(sel)) nerve.addFace(face);
  }
  return nerve;
}

std::string TitsCone::patternString(const InfinityPattern& v) const {
  static const char* coord[] = {"x", "y", "z", "w"};
  std::string s = "{";
  bool first = true;
  for (int i : v) {
    if (!first) s += ",";
    s += coord[i];
    first = false;
  }
  return s + "}";
}

TieredPocset TitsCone::toTiered() const {
  int d = c_.dim;
  static const char* coord[] = {"x", "y", "z", "w"};
  std::vector<std::string> fams(coord, coord + d);
  std::map<std::pair<int, int>, CrossRule> rules;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      std::optional<CrossRule> rule;
      for (std::size_t s = 0; s < c_.sectors.size(); ++s) {
        bool aActive = true, bActive = true, aGeB = false, bGeA = false;
        for (const auto& con : c_.sectors[s]) {
          if (con.kind == ConeConstraint::Kind::zero) {
            if (con.i == a) aActive = false;
            if (con.i == b) bActive = false;
          } else if (con.kind == ConeConstraint::Kind::ge) {
            if (con.i == a && con.j == b) aGeB = true;
            if (con.i == b && con.j == a) bGeA = true;
          }
        }
        if (!aActive || !bActive) continue;
        CrossRule r;
        if (aGeB && bGeA) throw DomainError("degenerate cone: equal coordinates");
        if (aGeB) {
          // Hyperplane a_i crosses b_j iff the unit square fits: i >= j + 1.
          r.pred = CrossRule::Pred::ge;
          r.c = 1;
          r.a_side = Side::minus;
          r.b_side = Side::minus;  // a_i^- in b_j^-  (b_j^+ in a_i^+)
        } else if (bGeA) {
          r.pred = CrossRule::Pred::le;
          r.c = -1;
          r.a_side = Side::plus;
          r.b_side = Side::plus;  // a_i^+ in b_j^+
        } else {
          r.pred = CrossRule::Pred::always;
        }
        if (rule && !(rule->pred == r.pred && rule->c == r.c))
          throw DomainError("sectors disagree on a crossing rule");
        rule = r;
      }
      if (!rule) {
        // The coordinates never share a sector: their deep rays face away.
        CrossRule r;
        r.pred = CrossRule::Pred::never;
        r.a_side = Side::plus;
        r.b_side = Side::minus;  // a_i^+ in b_j^-
        rule = r;
      }
      rules[{a, b}] = *rule;
    }
  return TieredPocset(fams, rules);
}

}  // namespace cubical
