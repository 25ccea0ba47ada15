#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubical/types.hpp"

namespace cubical {

enum class RelKind : std::uint8_t { transverse, nested };

// Relation between an ordered pair of distinct hyperplanes (a, b).
// For nested pairs the stored statement is  a^{a_side} subset of b^{b_side}.
// The other three containments of the pair follow by taking complements.
struct Rel {
  RelKind kind = RelKind::transverse;
  Side a_side = Side::plus;
  Side b_side = Side::plus;

  bool operator==(const Rel&) const = default;
};

// Relation with the roles of a and b exchanged.
inline Rel swapped(const Rel& r) {
  if (r.kind == RelKind::transverse) return r;
  return Rel{RelKind::nested, opposite(r.b_side), opposite(r.a_side)};
}

// A finite pocset given by an explicit relation table. Hyperplanes are
// addressed by their row index; `names` and `tags` carry presentation labels
// (tags record (family, index) for pocsets produced by truncation).
class FinitePocset {
 public:
  FinitePocset() = default;
  FinitePocset(std::vector<std::string> names, std::vector<HypId> tags);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const HypId& tag(int i) const { return tags_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> indexOf(const std::string& name) const;

  void setRel(int a, int b, const Rel& r);
  Rel rel(int a, int b) const;  // a != b, oriented as (a, b)
  bool relKnown(int a, int b) const;

  // a^{sa} subset of b^{sb}?
  bool hsSubset(int a, Side sa, int b, Side sb) const;
  // a^{sa} and b^{sb} disjoint?
  bool hsDisjoint(int a, Side sa, int b, Side sb) const;
  bool transverse(int a, int b) const;
  // The side of hyperplane l whose halfspace contains the wall a
  // (requires a, l non-transverse).
  Side wallSide(int a, int l) const;
  // Does l separate the walls a and b?
  bool separates(int l, int a, int b) const;

  // Checks that every pair carries exactly one relation and that halfspace
  // containment is transitive. Throws DomainError with a witness otherwise.
  void validate() const;

  // Subsets of `t` hyperplanes admitting pairwise-disjoint complementary
  // orientations, i.e. sides s_i with the complements h_i^{-s_i} pairwise
  // disjoint. Reported in lexicographic order of the index tuples.
  std::vector<std::vector<int>> facingTuples(int t) const;

  // Least inseparable superset: repeatedly adds every hyperplane separating
  // two members.
  std::set<int> inseparableClosure(std::set<int> s) const;

 private:
  int cell(int a, int b) const { return a * size() + b; }

  std::vector<std::string> names_;
  std::vector<HypId> tags_;
  std::vector<Rel> table_;       // oriented (a, b), a < b slots authoritative
  std::vector<char> known_;
};

}  // namespace cubical
