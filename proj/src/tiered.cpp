#include "cubical/tiered.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cubical {

namespace {

long stepValue(const CrossRule& r, long i) {
  switch (r.pred) {
    case CrossRule::Pred::step_linear:
      return static_cast<long>(std::floor(r.alpha * static_cast<double>(i))) + r.beta;
    case CrossRule::Pred::step_sqrt:
      return static_cast<long>(std::floor(std::sqrt(static_cast<double>(i))));
    case CrossRule::Pred::step_log:
      return static_cast<long>(std::floor(std::log2(static_cast<double>(i + 1))));
    default:
      return 0;
  }
}

}  // namespace

bool CrossRule::crosses(long i, long j) const {
  switch (pred) {
    case Pred::always: return true;
    case Pred::never: return false;
    case Pred::ge: return i >= j + c;
    case Pred::le: return i <= j + c;
    case Pred::step_linear:
    case Pred::step_sqrt:
    case Pred::step_log: return j <= stepValue(*this, i);
  }
  return false;
}

bool CrossRule::eventuallyCrossesInA(long j) const {
  switch (pred) {
    case Pred::always: return true;
    case Pred::never: return false;
    case Pred::ge: return true;
    case Pred::le: return false;
    case Pred::step_linear:
      if (alpha > 0) return true;
      return j <= beta;  // constant step
    case Pred::step_sqrt:
    case Pred::step_log: return true;  // unbounded step functions
  }
  return false;
}

bool CrossRule::eventuallyCrossesInB(long i) const {
  switch (pred) {
    case Pred::always: return true;
    case Pred::never: return false;
    case Pred::ge: return false;
    case Pred::le: return true;
    case Pred::step_linear:
    case Pred::step_sqrt:
    case Pred::step_log: return false;  // j outruns the step value
  }
  return false;
}

long CrossRule::maxOffset() const {
  switch (pred) {
    case Pred::ge:
    case Pred::le: return std::labs(c);
    case Pred::step_linear: return std::labs(beta) + static_cast<long>(std::ceil(std::fabs(alpha)));
    default: return 0;
  }
}

std::string CrossRule::predString() const {
  std::ostringstream os;
  switch (pred) {
    case Pred::always: return "always";
    case Pred::never: return "never";
    case Pred::ge: os << "i >= j + " << c; break;
    case Pred::le: os << "i <= j + " << c; break;
    case Pred::step_linear: os << "j <= floor(" << alpha << "*i + " << beta << ")"; break;
    case Pred::step_sqrt: return "j <= floor(sqrt(i))";
    case Pred::step_log: return "j <= floor(log2(i + 1))";
  }
  return os.str();
}

CrossRule CrossRule::parsePred(const std::string& text, CrossRule base) {
  CrossRule r = base;
  auto strip = [](std::string s) {
    std::string out;
    for (char ch : s)
      if (!isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
  };
  std::string t = strip(text);
  if (t == "always") { r.pred = Pred::always; return r; }
  if (t == "never") { r.pred = Pred::never; return r; }
  long c = 0;
  if (sscanf(t.c_str(), "i>=j+%ld", &c) == 1) { r.pred = Pred::ge; r.c = c; return r; }
  if (sscanf(t.c_str(), "i>=j-%ld", &c) == 1) { r.pred = Pred::ge; r.c = -c; return r; }
  if (t == "i>=j") { r.pred = Pred::ge; r.c = 0; return r; }
  if (sscanf(t.c_str(), "i<=j+%ld", &c) == 1) { r.pred = Pred::le; r.c = c; return r; }
  if (sscanf(t.c_str(), "i<=j-%ld", &c) == 1) { r.pred = Pred::le; r.c = -c; return r; }
  if (t == "i<=j") { r.pred = Pred::le; r.c = 0; return r; }
  if (t == "j<=floor(sqrt(i))") { r.pred = Pred::step_sqrt; return r; }
  if (t == "j<=floor(log2(i+1))") { r.pred = Pred::step_log; return r; }
  double alpha = 0;
  long beta = 0;
  if (sscanf(t.c_str(), "j<=floor(%lf*i+%ld)", &alpha, &beta) == 2 ||
      sscanf(t.c_str(), "j<=floor(%lf*i-%ld)", &alpha, &beta) == 2) {
    if (t.find("*i-") != std::string::npos) beta = -beta;
    r.pred = Pred::step_linear;
    r.alpha = alpha;
    r.beta = beta;
    if (alpha < 0) throw DomainError("cross rule: negative slope breaks monotonicity");
    return r;
  }
  throw DomainError("cross rule: cannot parse predicate '" + text + "'");
}

TieredPocset::TieredPocset(std::vector<std::string> familyNames,
                           std::map<std::pair<int, int>, CrossRule> rules)
    : families_(std::move(familyNames)), rules_(std::move(rules)) {
  if (families_.empty()) throw DomainError("tiered pocset: no families");
  long off = 0;
  for (auto& [k, r] : rules_) off = std::max(off, r.maxOffset());
  window_ = 2 * off + 4;
}

std::optional<int> TieredPocset::familyIndex(const std::string& name) const {
  auto it = std::find(families_.begin(), families_.end(), name);
  if (it == families_.end()) return std::nullopt;
  return static_cast<int>(it - families_.begin());
}

const CrossRule* TieredPocset::ruleFor(int a, int b, bool& flipped) const {
  auto it = rules_.find({a, b});
  if (it != rules_.end()) {
    flipped = false;
    return &it->second;
  }
  it = rules_.find({b, a});
  if (it != rules_.end()) {
    flipped = true;
    return &it->second;
  }
  throw DomainError("tiered pocset: no rule for family pair (" + familyName(a) + ", " +
                    familyName(b) + ")");
}

Rel TieredPocset::relate(const HypId& a, const HypId& b) const {
  if (a.family == b.family) {
    if (a.index == b.index) throw DomainError("relate: identical hyperplanes");
    // For m < n:  a_n^+ subset of a_m^+,  i.e.  a_m^- subset of a_n^-.
    if (a.index < b.index) return Rel{RelKind::nested, Side::minus, Side::minus};
    return Rel{RelKind::nested, Side::plus, Side::plus};
  }
  bool flipped = false;
  const CrossRule* r = ruleFor(a.family, b.family, flipped);
  long i = flipped ? b.index : a.index;
  long j = flipped ? a.index : b.index;
  if (r->crosses(i, j)) return Rel{RelKind::transverse, Side::plus, Side::plus};
  Rel stmt{RelKind::nested, r->a_side, r->b_side};
  return flipped ? swapped(stmt) : stmt;
}

bool TieredPocset::crosses(const HypId& a, const HypId& b) const {
  return a.family != b.family && relate(a, b).kind == RelKind::transverse;
}

bool TieredPocset::eventuallyCrosses(int varyingFamily, int fixedFamily,
                                     long fixedIndex) const {
  if (varyingFamily == fixedFamily) return false;
  bool flipped = false;
  const CrossRule* r = ruleFor(varyingFamily, fixedFamily, flipped);
  return flipped ? r->eventuallyCrossesInB(fixedIndex)
                 : r->eventuallyCrossesInA(fixedIndex);
}

std::optional<Rel> TieredPocset::limitRel(int varyingFamily, int fixedFamily,
                                          long fixedIndex) const {
  if (varyingFamily == fixedFamily) {
    // Large indices sit on the deep side of the fixed hyperplane.
    return Rel{RelKind::nested, Side::plus, Side::plus};  // a_big^+ in a_fixed^+
  }
  if (eventuallyCrosses(varyingFamily, fixedFamily, fixedIndex)) return std::nullopt;
  bool flipped = false;
  const CrossRule* r = ruleFor(varyingFamily, fixedFamily, flipped);
  Rel stmt{RelKind::nested, r->a_side, r->b_side};
  return flipped ? swapped(stmt) : stmt;
}

FinitePocset TieredPocset::truncate(long n) const {
  if (n <= 0) throw DomainError("truncate: window must be positive");
  std::vector<std::string> names;
  std::vector<HypId> tags;
  for (int f = 0; f < familyCount(); ++f)
    for (long i = 0; i < n; ++i) {
      names.push_back(familyName(f) + std::to_string(i));
      tags.push_back(HypId{f, i});
    }
  FinitePocset p(std::move(names), std::move(tags));
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      p.setRel(a, b, relate(p.tag(a), p.tag(b)));
  p.validate();
  return p;
}

void TieredPocset::validate() const {
  for (auto& [key, r] : rules_) {
    auto [fa, fb] = key;
    if (fa < 0 || fb < 0 || fa >= familyCount() || fb >= familyCount() || fa == fb)
      throw DomainError("tiered pocset: rule references a bad family pair");
    if (rules_.count({fb, fa}))
      throw DomainError("tiered pocset: duplicate rule for pair (" + familyName(fa) + ", " +
                        familyName(fb) + ")");
    // Monotonicity of the crossing region on a sample window: up-set or
    // down-set in each argument.
    long w = std::max<long>(window_ * 2, 16);
    for (long i = 0; i + 1 < w; ++i)
      for (long j = 0; j < w; ++j) {
        bool c0 = r.crosses(i, j), c1 = r.crosses(i + 1, j);
        bool upA = r.pred == CrossRule::Pred::ge || r.pred == CrossRule::Pred::step_linear ||
                   r.pred == CrossRule::Pred::step_sqrt || r.pred == CrossRule::Pred::step_log;
        if (r.pred == CrossRule::Pred::always || r.pred == CrossRule::Pred::never) continue;
        if (upA && c0 && !c1)
          throw DomainError("cross rule not monotone in first index: " + r.predString());
        if (!upA && !c0 && c1)
          throw DomainError("cross rule not monotone in first index: " + r.predString());
      }
  }
  for (int a = 0; a < familyCount(); ++a)
    for (int b = a + 1; b < familyCount(); ++b) {
      bool flipped = false;
      ruleFor(a, b, flipped);  // throws when missing
    }
  // The truncation must be a valid pocset.
  truncate(std::max<long>(window_, 6));
}

}  // namespace cubical
