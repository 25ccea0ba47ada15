#include "cubical/pocset.hpp"

#include <algorithm>

namespace cubical {

FinitePocset::FinitePocset(std::vector<std::string> names, std::vector<HypId> tags)
    : names_(std::move(names)), tags_(std::move(tags)) {
  if (tags_.empty()) tags_.assign(names_.size(), HypId{-1, 0});
  if (tags_.size() != names_.size())
    throw DomainError("pocset: tag list length does not match hyperplane count");
  for (size_t i = 0; i < tags_.size(); ++i)
    if (tags_[i].family == -1) tags_[i].index = static_cast<long>(i);
  table_.assign(names_.size() * names_.size(), Rel{});
  known_.assign(names_.size() * names_.size(), 0);
}

std::optional<int> FinitePocset::indexOf(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

void FinitePocset::setRel(int a, int b, const Rel& r) {
  if (a == b) throw DomainError("pocset: relation of a hyperplane with itself");
  table_[cell(a, b)] = r;
  table_[cell(b, a)] = swapped(r);
  known_[cell(a, b)] = known_[cell(b, a)] = 1;
}

Rel FinitePocset::rel(int a, int b) const {
  if (a == b) throw DomainError("pocset: relation of a hyperplane with itself");
  if (!known_[cell(a, b)])
    throw DomainError("pocset: missing relation for pair (" + name(a) + ", " + name(b) + ")");
  return table_[cell(a, b)];
}

bool FinitePocset::relKnown(int a, int b) const { return known_[cell(a, b)] != 0; }

bool FinitePocset::hsSubset(int a, Side sa, int b, Side sb) const {
  if (a == b) return sa == sb;
  Rel r = rel(a, b);
  if (r.kind != RelKind::nested) return false;
  return r.a_side == sa && r.b_side == sb;
}

bool FinitePocset::hsDisjoint(int a, Side sa, int b, Side sb) const {
  if (a == b) return sa != sb;
  return hsSubset(a, sa, b, opposite(sb));
}

bool FinitePocset::transverse(int a, int b) const {
  return a != b && rel(a, b).kind == RelKind::transverse;
}

Side FinitePocset::wallSide(int a, int l) const {
  Rel r = rel(a, l);  // statement a^{a_side} subset of l^{b_side}
  if (r.kind != RelKind::nested)
    throw DomainError("pocset: wallSide of a transverse pair");
  return r.b_side;
}

bool FinitePocset::separates(int l, int a, int b) const {
  if (l == a || l == b || a == b) return false;
  if (transverse(a, l) || transverse(b, l)) return false;
  return wallSide(a, l) != wallSide(b, l);
}

void FinitePocset::validate() const {
  int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!known_[cell(a, b)])
        throw DomainError("pocset: no relation declared for (" + name(a) + ", " + name(b) + ")");
  // Transitivity of halfspace containment across every triple.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || rel(a, b).kind != RelKind::nested) continue;
      Rel ab = rel(a, b);
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b || rel(b, c).kind != RelKind::nested) continue;
        Rel bc = rel(b, c);
        if (bc.a_side != ab.b_side) continue;
        // a^{ab.a} in b^{ab.b} and b^{ab.b} in c^{bc.b}: need a^{ab.a} in c^{bc.b}.
        if (!hsSubset(a, ab.a_side, c, bc.b_side))
          throw DomainError("pocset: containment not transitive on (" + name(a) + ", " +
                            name(b) + ", " + name(c) + ")");
      }
    }
}

std::vector<std::vector<int>> FinitePocset::facingTuples(int t) const {
  std::vector<std::vector<int>> out;
  int n = size();
  if (t < 2 || t > n) return out;
  std::vector<int> pick(t);
  // Enumerate index subsets in lexicographic order.
  auto tryOrientations = [&](const std::vector<int>& hs) {
    int k = static_cast<int>(hs.size());
    for (int bits = 0; bits < (1 << k); ++bits) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = i + 1; j < k && ok; ++j) {
          Side si = (bits >> i) & 1 ? Side::plus : Side::minus;
          Side sj = (bits >> j) & 1 ? Side::plus : Side::minus;
          if (!hsDisjoint(hs[i], opposite(si), hs[j], opposite(sj))) ok = false;
        }
      if (ok) return true;
    }
    return false;
  };
  std::vector<int> stack;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(stack.size()) == t) {
      if (tryOrientations(stack)) out.push_back(stack);
      return;
    }
    for (int i = start; i < n; ++i) {
      stack.push_back(i);
      self(self, i + 1);
      stack.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::set<int> FinitePocset::inseparableClosure(std::set<int> s) const {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int l = 0; l < size(); ++l) {
      if (s.count(l)) continue;
      for (int a : s) {
        bool done = false;
        for (int b : s) {
          if (b <= a) continue;
          if (separates(l, a, b)) {
            s.insert(l);
            grew = true;
            done = true;
            break;
          }
        }
        if (done) break;
      }
    }
  }
  return s;
}

}  // namespace cubical
