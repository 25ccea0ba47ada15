#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubical/ubs.hpp"

namespace cubical {

// Commensurability class of Roller boundary points, recorded by its deep-set
// fingerprint: the families on whose deep tails the class sits.
struct RollerClass {
  std::set<int> deep;
  auto operator<=>(const RollerClass&) const = default;
};

// v <= w in the Roller poset: the halfspaces containing v's umbra are among
// those containing w's umbra, i.e. deep-set containment.
inline bool rollerLeq(const RollerClass& v, const RollerClass& w) {
  for (int f : v.deep)
    if (!w.deep.count(f)) return false;
  return true;
}

class RollerCalculus {
 public:
  explicit RollerCalculus(const TieredPocset& t, long window = 0)
      : t_(t), ubs_(t, window) {}

  const UBSCalculus& ubs() const { return ubs_; }

  // R^U: the principal Roller class of the umbra of a UBS class. A family g
  // is deep exactly when for every n some member's deep halfspace is
  // contained in g_n^+.
  RollerClass umbra(const UBSClass& a) const;

  // U^R: the class of the walls separating the base vertex from the class
  // representative (deep on the fingerprint families, shallow elsewhere).
  UBSClass classUBS(const RollerClass& v) const;

  // U^R(R^U(a)) == a.
  bool l1Visible(const UBSClass& a) const;

  // All Roller classes, by iterating the umbra over every candidate family
  // subset whose inseparable closure is a UBS.
  struct Classes {
    std::vector<RollerClass> classes;                 // sorted by fingerprint
    std::map<std::set<int>, UBSClass> candidateMap;   // family subset -> class
  };
  Classes enumerateClasses() const;

  // All UBS classes (deduplicated by component set).
  std::vector<UBSClass> enumerateUBSClasses() const;

  std::string fingerprintString(const RollerClass& v) const;

 private:
  bool familyDeepInUmbra(const std::set<int>& memberFamilies, int g) const;

  const TieredPocset& t_;
  UBSCalculus ubs_;
};

}  // namespace cubical
