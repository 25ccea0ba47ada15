#include "cubical/roller.hpp"

#include <algorithm>

namespace cubical {

bool RollerCalculus::familyDeepInUmbra(const std::set<int>& memberFamilies, int g) const {
  if (memberFamilies.count(g)) return true;
  long w = ubs_.window();
  // Need: for every n, some member family f has f_i^+ inside g_n^+ for
  // large i. The verdict per n must hold across the window and stay constant
  // on the trailing margin.
  std::optional<bool> marginVerdict;
  for (long n = 0; n < w; ++n) {
    bool found = false;
    for (int f : memberFamilies) {
      auto lim = t_.limitRel(f, g, n);  // statement f_big^{a} in g_n^{b}
      if (lim && lim->a_side == Side::plus && lim->b_side == Side::plus) {
        found = true;
        break;
      }
    }
    if (n >= w - 6) {
      if (marginVerdict && *marginVerdict != found)
        throw LimitError("umbra fingerprint did not stabilize for family " + t_.familyName(g));
      marginVerdict = found;
    }
    if (!found) return false;
  }
  return true;
}

RollerClass RollerCalculus::umbra(const UBSClass& a) const {
  std::set<int> memberFamilies;
  for (const auto& c : a.components)
    memberFamilies.insert(c.families.begin(), c.families.end());
  RollerClass v;
  for (int g = 0; g < t_.familyCount(); ++g)
    if (familyDeepInUmbra(memberFamilies, g)) v.deep.insert(g);
  return v;
}

UBSClass RollerCalculus::classUBS(const RollerClass& v) const {
  if (v.deep.empty()) throw DomainError("classUBS: interior class has no walls at infinity");
  UBSDescriptor d = UBSDescriptor::tailsAtZero(v.deep);
  d = ubs_.prune(d);
  return ubs_.minimalDecomposition(d);
}

bool RollerCalculus::l1Visible(const UBSClass& a) const {
  return classUBS(umbra(a)) == a;
}

RollerCalculus::Classes RollerCalculus::enumerateClasses() const {
  Classes out;
  std::set<RollerClass> seen;
  int n = t_.familyCount();
  if (n > 16) throw ResourceError("class enumeration capped at 16 families");
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::set<int> fams;
    for (int f = 0; f < n; ++f)
      if ((mask >> f) & 1) fams.insert(f);
    UBSDescriptor d = UBSDescriptor::tailsAtZero(fams);
    UBSDescriptor cl;
    try {
      cl = ubs_.inseparableClosure(d);
    } catch (const LimitError&) {
      continue;
    }
    if (!ubs_.isUBS(cl)) continue;
    UBSClass c = ubs_.minimalDecomposition(cl);
    out.candidateMap[fams] = c;
    RollerClass v = umbra(c);
    if (seen.insert(v).second) out.classes.push_back(v);
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

std::vector<UBSClass> RollerCalculus::enumerateUBSClasses() const {
  std::vector<UBSClass> out;
  std::set<std::set<MinimalComponent>> seen;
  int n = t_.familyCount();
  if (n > 16) throw ResourceError("class enumeration capped at 16 families");
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::set<int> fams;
    for (int f = 0; f < n; ++f)
      if ((mask >> f) & 1) fams.insert(f);
    UBSDescriptor d = UBSDescriptor::tailsAtZero(fams);
    UBSDescriptor cl;
    try {
      cl = ubs_.inseparableClosure(d);
    } catch (const LimitError&) {
      continue;
    }
    if (!ubs_.isUBS(cl)) continue;
    UBSClass c = ubs_.minimalDecomposition(cl);
    if (seen.insert(c.componentSet()).second) out.push_back(c);
  }
  return out;
}

std::string RollerCalculus::fingerprintString(const RollerClass& v) const {
  std::string s = "(";
  for (int f = 0; f < t_.familyCount(); ++f) {
    if (f) s += ",";
    s += v.deep.count(f) ? "inf" : "0";
  }
  return s + ")";
}

}  // namespace cubical
