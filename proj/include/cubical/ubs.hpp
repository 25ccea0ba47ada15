#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubical/tiered.hpp"

namespace cubical {

// A set of hyperplanes of a tiered pocset that is eventually a union of
// family tails: per-family tail starts plus finite corrections.
struct UBSDescriptor {
  std::map<int, long> tails;  // family -> first index of the tail
  std::set<HypId> add;        // finitely many extra members
  std::set<HypId> drop;       // finitely many members removed from tails

  bool contains(const HypId& h) const;
  std::set<int> tailFamilies() const;
  // Members with index below `window`, in lexicographic order.
  std::vector<HypId> membersBelow(long window) const;
  bool operator==(const UBSDescriptor&) const = default;

  static UBSDescriptor tailsAtZero(const std::set<int>& families);
};

// Do two descriptors differ in finitely many hyperplanes? With tail
// representations this is equality of tail family sets.
bool commensurate(const UBSDescriptor& a, const UBSDescriptor& b);

// A minimal (inseparable, unidirectional) piece of a UBS, recorded by the
// families whose tails it contains.
struct MinimalComponent {
  std::set<int> families;
  auto operator<=>(const MinimalComponent&) const = default;
};

// Commensurability class of a UBS, identified by its minimal components in
// dominance order (component i crosses all but finitely many hyperplanes of
// component j for j < i).
struct UBSClass {
  std::vector<MinimalComponent> components;  // dominance order, low to high
  std::set<MinimalComponent> componentSet() const {
    return {components.begin(), components.end()};
  }
  int dimension() const { return static_cast<int>(components.size()); }
  bool operator==(const UBSClass& o) const { return componentSet() == o.componentSet(); }
};

// A ⪯ B: A is commensurate with a subset of B.
bool preceq(const UBSClass& a, const UBSClass& b);

struct UBSWitness {
  std::string reason;       // "finite", "two-sided", "separated", "facing-triple"
  std::vector<HypId> hyps;  // offending hyperplanes
};

class UBSCalculus {
 public:
  explicit UBSCalculus(const TieredPocset& t, long window = 0);

  long window() const { return window_; }

  // Sides of h on which the descriptor has infinitely many members.
  std::set<Side> infiniteSides(const UBSDescriptor& s, const HypId& h) const;

  // Unbounded, unidirectional, inseparable, no facing triple. On failure the
  // witness names the violated clause.
  bool isUBS(const UBSDescriptor& s, UBSWitness* witness = nullptr) const;

  // Removes every member both of whose sides meet the set finitely.
  UBSDescriptor prune(const UBSDescriptor& s) const;

  // Least inseparable superset, computed on an index window and compressed
  // back to tail form; throws LimitError when the window result does not
  // stabilize.
  UBSDescriptor inseparableClosure(const UBSDescriptor& s) const;

  // Decomposition of a UBS into minimal components, in dominance order.
  UBSClass minimalDecomposition(const UBSDescriptor& s) const;

  // Does every hyperplane of `upper` cross all but finitely many hyperplanes
  // of `lower`?
  bool above(const MinimalComponent& upper, const MinimalComponent& lower) const;

  // Flags per component of the class: dominant means above every other
  // component.
  std::vector<bool> dominantComponents(const UBSClass& c) const;

  // Canonical descriptor of a class: tails at zero for every family of every
  // component.
  UBSDescriptor descriptorOf(const UBSClass& c) const;

 private:
  std::set<Side> infiniteSidesChecked(const UBSDescriptor& s, int family, long index) const;

  const TieredPocset& t_;
  long window_;
};

}  // namespace cubical
