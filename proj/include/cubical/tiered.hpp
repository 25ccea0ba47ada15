#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubical/pocset.hpp"
#include "cubical/types.hpp"

namespace cubical {

// Crossing rule for an ordered pair of families (a, b). `i` is the index in
// family a, `j` the index in family b. The crossing region is monotone in
// each argument; `a_side`/`b_side` give the constant nesting statement
//   a_i^{a_side} subset of b_j^{b_side}
// that holds whenever the pair does not cross.
struct CrossRule {
  enum class Pred : std::uint8_t {
    always,
    never,
    ge,          // cross iff i >= j + c
    le,          // cross iff i <= j + c
    step_linear, // cross iff j <= floor(alpha * i + beta)
    step_sqrt,   // cross iff j <= floor(sqrt(i))
    step_log,    // cross iff j <= floor(log2(i + 1))
  };

  Pred pred = Pred::always;
  long c = 0;
  double alpha = 0.0;
  long beta = 0;
  Side a_side = Side::minus;
  Side b_side = Side::minus;

  bool crosses(long i, long j) const;
  // Limit regime for i -> infinity with j fixed.
  bool eventuallyCrossesInA(long j) const;
  // Limit regime for j -> infinity with i fixed.
  bool eventuallyCrossesInB(long i) const;
  // Largest constant offset appearing in the rule, used for the stability
  // window heuristic.
  long maxOffset() const;

  std::string predString() const;
  static CrossRule parsePred(const std::string& text, CrossRule base);
};

// A finitely presented pocset: finitely many descending chains ("families")
// indexed by the naturals, with one crossing rule per family pair. Within a
// family, the deep halfspace of index n contains every larger index:
// a_{n+1}^+ subset of a_n^+.
class TieredPocset {
 public:
  TieredPocset(std::vector<std::string> familyNames,
               std::map<std::pair<int, int>, CrossRule> rules);

  int familyCount() const { return static_cast<int>(families_.size()); }
  const std::string& familyName(int f) const { return families_.at(f); }
  const std::vector<std::string>& familyNames() const { return families_; }
  std::optional<int> familyIndex(const std::string& name) const;
  const std::map<std::pair<int, int>, CrossRule>& rules() const { return rules_; }

  // Relation between two hyperplanes, oriented as (a, b).
  Rel relate(const HypId& a, const HypId& b) const;
  bool crosses(const HypId& a, const HypId& b) const;
  // Limit regime of relate((f, i), (g, j)) as the index of `varying` goes to
  // infinity and the other index stays fixed at `fixedIndex`. Returns nullopt
  // when the pair eventually crosses.
  std::optional<Rel> limitRel(int varyingFamily, int fixedFamily, long fixedIndex) const;
  bool eventuallyCrosses(int varyingFamily, int fixedFamily, long fixedIndex) const;

  // Finite restriction to indices < n in every family.
  FinitePocset truncate(long n) const;

  long stabilityWindow() const { return window_; }

  // Structural checks: rule monotonicity on a sample window, symmetry of the
  // presentation, within-window agreement of relate with the rule table.
  void validate() const;

 private:
  const CrossRule* ruleFor(int a, int b, bool& flipped) const;

  std::vector<std::string> families_;
  std::map<std::pair<int, int>, CrossRule> rules_;
  long window_ = 4;
};

}  // namespace cubical
