#include "cubical/ubs.hpp"

#include <algorithm>

namespace cubical {

bool UBSDescriptor::contains(const HypId& h) const {
  if (add.count(h)) return true;
  auto it = tails.find(h.family);
  if (it != tails.end() && h.index >= it->second) return !drop.count(h);
  return false;
}

std::set<int> UBSDescriptor::tailFamilies() const {
  std::set<int> out;
  for (auto& [f, start] : tails) out.insert(f);
  return out;
}

std::vector<HypId> UBSDescriptor::membersBelow(long window) const {
  std::set<HypId> out;
  for (auto& [f, start] : tails)
    for (long i = start; i < window; ++i)
      if (!drop.count(HypId{f, i})) out.insert(HypId{f, i});
  for (const auto& h : add)
    if (h.index < window) out.insert(h);
  return {out.begin(), out.end()};
}

UBSDescriptor UBSDescriptor::tailsAtZero(const std::set<int>& families) {
  UBSDescriptor d;
  for (int f : families) d.tails[f] = 0;
  return d;
}

bool commensurate(const UBSDescriptor& a, const UBSDescriptor& b) {
  return a.tailFamilies() == b.tailFamilies();
}

bool preceq(const UBSClass& a, const UBSClass& b) {
  auto bs = b.componentSet();
  for (const auto& c : a.components)
    if (!bs.count(c)) return false;
  return true;
}

UBSCalculus::UBSCalculus(const TieredPocset& t, long window) : t_(t) {
  window_ = window > 0 ? window : std::max<long>(2 * t.stabilityWindow() + 8, 24);
}

std::set<Side> UBSCalculus::infiniteSides(const UBSDescriptor& s, const HypId& h) const {
  std::set<Side> sides;
  for (auto& [f, start] : s.tails) {
    if (f == h.family) {
      // The tail past h sits on the deep side.
      sides.insert(Side::plus);
      continue;
    }
    auto lim = t_.limitRel(f, h.family, h.index);
    if (!lim) continue;  // eventually crossing: neither side accumulates
    // Statement f_big^{a} subset of h^{b}: the wall f_big lies in h^{b}.
    sides.insert(lim->b_side);
  }
  return sides;
}

std::set<Side> UBSCalculus::infiniteSidesChecked(const UBSDescriptor& s, int family,
                                                long index) const {
  return infiniteSides(s, HypId{family, index});
}

bool UBSCalculus::isUBS(const UBSDescriptor& s, UBSWitness* witness) const {
  if (s.tails.empty()) {
    if (witness) *witness = {"finite", {}};
    return false;
  }
  // Unidirectionality for every member. Members inside the window are
  // checked individually; the verdict for a family's large indices must be
  // constant over the trailing margin of the window.
  for (auto& [f, start] : s.tails) {
    std::set<Side> last;
    for (long i = start; i < window_; ++i) {
      HypId h{f, i};
      if (!s.contains(h)) continue;
      auto sides = infiniteSides(s, h);
      if (sides.size() > 1) {
        if (witness) *witness = {"two-sided", {h}};
        return false;
      }
      if (i >= window_ - 6) {
        if (!last.empty() && sides != last)
          throw LimitError("unidirectionality verdict did not stabilize for family " +
                           t_.familyName(f));
        last = sides;
      }
    }
  }
  for (const auto& h : s.add) {
    auto sides = infiniteSides(s, h);
    if (sides.size() > 1) {
      if (witness) *witness = {"two-sided", {h}};
      return false;
    }
  }
  // Inseparability.
  UBSDescriptor cl = inseparableClosure(s);
  for (const auto& h : cl.membersBelow(window_))
    if (!s.contains(h)) {
      // h separates two members of s: find a pair for the witness.
      auto members = s.membersBelow(window_);
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          Rel ra = t_.relate(members[a], h);
          Rel rb = t_.relate(members[b], h);
          if (ra.kind == RelKind::nested && rb.kind == RelKind::nested &&
              ra.b_side != rb.b_side) {
            if (witness) *witness = {"separated", {members[a], members[b], h}};
            return false;
          }
        }
      if (witness) *witness = {"separated", {h}};
      return false;
    }
  if (!commensurate(cl, s)) {
    if (witness) *witness = {"separated", {}};
    return false;
  }
  // No facing triple, checked on a truncation window.
  FinitePocset p = t_.truncate(window_);
  std::vector<int> memberIdx;
  for (int i = 0; i < p.size(); ++i)
    if (s.contains(p.tag(i))) memberIdx.push_back(i);
  for (auto& tuple : p.facingTuples(3)) {
    bool allIn = true;
    for (int i : tuple)
      if (!s.contains(p.tag(i))) allIn = false;
    if (allIn) {
      if (witness) {
        witness->reason = "facing-triple";
        witness->hyps.clear();
        for (int i : tuple) witness->hyps.push_back(p.tag(i));
      }
      return false;
    }
  }
  return true;
}

UBSDescriptor UBSCalculus::prune(const UBSDescriptor& s) const {
  UBSDescriptor out = s;
  for (auto& [f, start] : s.tails) {
    // Verdict for tail members; must stabilize over the margin.
    bool lastEmpty = false, haveLast = false;
    for (long i = start; i < window_; ++i) {
      HypId h{f, i};
      if (!s.contains(h)) continue;
      bool empty = infiniteSides(s, h).empty();
      if (empty) out.drop.insert(h);
      if (i >= window_ - 6) {
        if (haveLast && empty != lastEmpty)
          throw LimitError("prune verdict did not stabilize for family " + t_.familyName(f));
        lastEmpty = empty;
        haveLast = true;
      }
    }
    if (haveLast && lastEmpty) {
      // The whole tail dies: drop the family.
      out.tails.erase(f);
      for (auto it = out.drop.begin(); it != out.drop.end();)
        if (it->family == f) it = out.drop.erase(it);
        else ++it;
    }
  }
  for (const auto& h : s.add)
    if (infiniteSides(s, h).empty()) out.add.erase(h);
  return out;
}

UBSDescriptor UBSCalculus::inseparableClosure(const UBSDescriptor& s) const {
  for (auto& [f, start] : s.tails)
    if (start > window_ / 2)
      throw LimitError("closure: tail start exceeds half the window");
  auto closureAt = [&](long w) {
    FinitePocset p = t_.truncate(w);
    std::set<int> mem;
    for (int i = 0; i < p.size(); ++i)
      if (s.contains(p.tag(i))) mem.insert(i);
    std::set<int> cl = p.inseparableClosure(mem);
    UBSDescriptor d;
    // Tail detection: a family joins as a tail when its membership run
    // reaches the window edge. Indices within the trailing margin are
    // ignored: a separator near the edge can lack its outer witness in the
    // truncation.
    long edge = w - 6;
    for (int f = 0; f < t_.familyCount(); ++f) {
      long run = edge;
      while (run > 0 && cl.count(static_cast<int>(f * w + run - 1))) --run;
      if (run < edge) d.tails[f] = run;
      for (long i = 0; i < run; ++i)
        if (cl.count(static_cast<int>(f * w + i))) d.add.insert(HypId{f, i});
    }
    // Drops inside detected tails.
    for (auto& [f, start2] : d.tails)
      for (long i = start2; i < edge; ++i)
        if (!cl.count(static_cast<int>(f * w + i))) d.drop.insert(HypId{f, i});
    return d;
  };
  UBSDescriptor a = closureAt(window_);
  UBSDescriptor b = closureAt(window_ + 8);
  if (a.tails != b.tails || a.add != b.add || a.drop != b.drop)
    throw LimitError("inseparable closure did not stabilize on the window");
  return a;
}

UBSClass UBSCalculus::minimalDecomposition(const UBSDescriptor& s0) const {
  UBSDescriptor s = prune(s0);
  if (s.tails.empty()) throw DomainError("minimal decomposition of a finite set");
  std::set<MinimalComponent> comps;
  for (auto& [f, start] : s.tails) {
    // Inseparable closure of the family chain, shift-stabilized.
    std::set<int> prev;
    long shift = start;
    std::set<int> fams;
    for (int step = 0; step < 4; ++step, ++shift) {
      if (shift > window_ / 2) throw LimitError("component closure did not shift-stabilize");
      UBSDescriptor chain;
      chain.tails[f] = shift;
      UBSDescriptor cl = inseparableClosure(chain);
      fams = cl.tailFamilies();
      if (step > 0 && fams == prev) break;
      prev = fams;
    }
    comps.insert(MinimalComponent{fams});
  }
  // Dominance order.
  std::vector<MinimalComponent> pool(comps.begin(), comps.end());
  std::vector<MinimalComponent> list;
  while (!pool.empty()) {
    // Pick a component that is not strictly above any remaining one.
    std::size_t pick = pool.size();
    for (std::size_t i = 0; i < pool.size() && pick == pool.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (i == j) continue;
        if (above(pool[i], pool[j]) && !above(pool[j], pool[i])) minimal = false;
      }
      if (minimal) pick = i;
    }
    if (pick == pool.size())
      throw DomainError("components do not admit a dominance order");
    list.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<long>(pick));
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!above(list[i], list[j]))
        throw DomainError("components do not admit a dominance order");
  return UBSClass{list};
}

bool UBSCalculus::above(const MinimalComponent& upper, const MinimalComponent& lower) const {
  if (upper == lower) return true;
  // Every hyperplane of `upper` must cross all but finitely many hyperplanes
  // of `lower`: for each fixed member of upper, every family tail of lower
  // must be eventually crossing.
  for (int a : upper.families) {
    std::optional<bool> marginVerdict;
    for (long l = 0; l < window_; ++l) {
      bool ok = true;
      for (int b : lower.families) {
        if (b == a) {
          ok = false;  // members of one chain never cross each other
          break;
        }
        if (!t_.eventuallyCrosses(b, a, l)) {
          ok = false;
          break;
        }
      }
      if (l >= window_ - 6) {
        if (marginVerdict && *marginVerdict != ok)
          throw LimitError("dominance verdict did not stabilize");
        marginVerdict = ok;
      }
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<bool> UBSCalculus::dominantComponents(const UBSClass& c) const {
  std::vector<bool> out(c.components.size(), true);
  for (std::size_t i = 0; i < c.components.size(); ++i)
    for (std::size_t j = 0; j < c.components.size(); ++j)
      if (i != j && !above(c.components[i], c.components[j])) out[i] = false;
  return out;
}

UBSDescriptor UBSCalculus::descriptorOf(const UBSClass& c) const {
  std::set<int> fams;
  for (const auto& comp : c.components) fams.insert(comp.families.begin(), comp.families.end());
  return UBSDescriptor::tailsAtZero(fams);
}

}  // namespace cubical
