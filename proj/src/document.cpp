#include "cubical/document.hpp"

#include <fstream>

namespace cubical {

using nlohmann::json;

namespace {

Side parseSideChar(char c) {
  if (c == '+') return Side::plus;
  if (c == '-') return Side::minus;
  throw DomainError("document: bad halfspace sign");
}

// Nesting statements are written "a+ in b-" and the like.
Rel parseNested(const std::string& stmt) {
  std::string t;
  for (char c : stmt)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  // Expected form: a<sign>inb<sign>
  if (t.size() != 6 || t[0] != 'a' || t.substr(2, 2) != "in" || t[4] != 'b')
    throw DomainError("document: bad nesting statement '" + stmt + "'");
  return Rel{RelKind::nested, parseSideChar(t[1]), parseSideChar(t[5])};
}

std::string nestedString(const Rel& r) {
  return std::string("a") + sideChar(r.a_side) + " in b" + sideChar(r.b_side);
}

FinitePocset parseFinite(const json& j) {
  std::vector<std::string> names = j.at("hyperplanes").get<std::vector<std::string>>();
  FinitePocset p(names, {});
  for (const auto& rj : j.at("relations")) {
    std::string a = rj.at("a"), b = rj.at("b");
    auto ia = p.indexOf(a), ib = p.indexOf(b);
    if (!ia || !ib) throw DomainError("document: relation names unknown hyperplane");
    std::string kind = rj.at("rel");
    if (kind == "transverse") {
      p.setRel(*ia, *ib, Rel{RelKind::transverse, Side::plus, Side::plus});
    } else if (kind == "nested") {
      p.setRel(*ia, *ib, parseNested(rj.at("stmt").get<std::string>()));
    } else {
      throw DomainError("document: bad relation kind '" + kind + "'");
    }
  }
  p.validate();
  return p;
}

TieredPocset parseTiered(const json& j) {
  std::vector<std::string> fams = j.at("families").get<std::vector<std::string>>();
  std::map<std::pair<int, int>, CrossRule> rules;
  auto famIdx = [&](const std::string& n) {
    for (std::size_t i = 0; i < fams.size(); ++i)
      if (fams[i] == n) return static_cast<int>(i);
    throw DomainError("document: rule names unknown family '" + n + "'");
  };
  for (const auto& rj : j.at("rules")) {
    int a = famIdx(rj.at("a")), b = famIdx(rj.at("b"));
    CrossRule r = CrossRule::parsePred(rj.at("cross_iff").get<std::string>(), CrossRule{});
    if (rj.contains("noncross")) {
      Rel stmt = parseNested(rj.at("noncross").get<std::string>());
      r.a_side = stmt.a_side;
      r.b_side = stmt.b_side;
    } else if (r.pred != CrossRule::Pred::always) {
      throw DomainError("document: rule with a non-crossing regime needs 'noncross'");
    }
    rules[{a, b}] = r;
  }
  TieredPocset t(fams, rules);
  t.validate();
  return t;
}

ConeConstraint parseConstraint(const std::string& text, int dim) {
  auto coordIdx = [&](char c) {
    static const std::string coords = "xyzw";
    auto pos = coords.find(c);
    if (pos == std::string::npos || static_cast<int>(pos) >= dim)
      throw DomainError("document: bad coordinate in constraint '" + text + "'");
    return static_cast<int>(pos);
  };
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  ConeConstraint con;
  if (t.size() == 4 && t.substr(1) == ">=0") {
    con.kind = ConeConstraint::Kind::nonneg;
    con.i = coordIdx(t[0]);
  } else if (t.size() == 3 && t.substr(1, 1) == "=" && t[2] == '0') {
    con.kind = ConeConstraint::Kind::zero;
    con.i = coordIdx(t[0]);
  } else if (t.size() == 4 && t.substr(1, 2) == ">=") {
    con.kind = ConeConstraint::Kind::ge;
    con.i = coordIdx(t[0]);
    con.j = coordIdx(t[3]);
  } else {
    throw DomainError("document: bad constraint '" + text + "'");
  }
  return con;
}

std::string constraintString(const ConeConstraint& c) {
  static const char* coords = "xyzw";
  switch (c.kind) {
    case ConeConstraint::Kind::nonneg: return std::string(1, coords[c.i]) + " >= 0";
    case ConeConstraint::Kind::zero: return std::string(1, coords[c.i]) + " = 0";
    case ConeConstraint::Kind::ge:
      return std::string(1, coords[c.i]) + " >= " + std::string(1, coords[c.j]);
  }
  return "";
}

CubicalCone parseCone(const json& j) {
  CubicalCone c;
  c.dim = j.at("dimension").get<int>();
  if (j.contains("sectors")) {
    for (const auto& sj : j.at("sectors")) {
      std::vector<ConeConstraint> sec;
      for (const auto& cj : sj) sec.push_back(parseConstraint(cj.get<std::string>(), c.dim));
      c.sectors.push_back(sec);
    }
  } else {
    std::vector<ConeConstraint> sec;
    for (const auto& cj : j.at("constraints"))
      sec.push_back(parseConstraint(cj.get<std::string>(), c.dim));
    c.sectors.push_back(sec);
  }
  TitsCone check(c);  // structural validation
  return c;
}

}  // namespace

Document parseDocument(const json& j) {
  Document d;
  if (!j.contains("kind")) throw DomainError("document: missing 'kind'");
  d.kind = j.at("kind").get<std::string>();
  d.name = j.value("name", "");
  if (j.contains("expected_results")) d.expectations = j.at("expected_results");
  if (d.kind == "finite") d.finite = parseFinite(j);
  else if (d.kind == "tiered") d.tiered = parseTiered(j);
  else if (d.kind == "cone") d.cone = parseCone(j);
  else throw DomainError("document: unknown kind '" + d.kind + "'");
  d.raw = serializeDocument(d);
  return d;
}

Document loadDocument(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw DomainError(std::string("json parse error: ") + e.what());
  }
  return parseDocument(j);
}

json serializeDocument(const Document& d) {
  json j;
  j["kind"] = d.kind;
  if (!d.name.empty()) j["name"] = d.name;
  if (d.finite) {
    const FinitePocset& p = *d.finite;
    j["hyperplanes"] = p.names();
    json rels = json::array();
    for (int a = 0; a < p.size(); ++a)
      for (int b = a + 1; b < p.size(); ++b) {
        Rel r = p.rel(a, b);
        json rj;
        rj["a"] = p.name(a);
        rj["b"] = p.name(b);
        if (r.kind == RelKind::transverse) {
          rj["rel"] = "transverse";
        } else {
          rj["rel"] = "nested";
          rj["stmt"] = nestedString(r);
        }
        rels.push_back(rj);
      }
    j["relations"] = rels;
  }
  if (d.tiered) {
    const TieredPocset& t = *d.tiered;
    j["families"] = t.familyNames();
    json rules = json::array();
    for (const auto& [key, r] : t.rules()) {
      json rj;
      rj["a"] = t.familyName(key.first);
      rj["b"] = t.familyName(key.second);
      rj["cross_iff"] = r.predString();
      if (r.pred != CrossRule::Pred::always)
        rj["noncross"] = nestedString(Rel{RelKind::nested, r.a_side, r.b_side});
      rules.push_back(rj);
    }
    j["rules"] = rules;
  }
  if (d.cone) {
    j["dimension"] = d.cone->dim;
    json sectors = json::array();
    for (const auto& sec : d.cone->sectors) {
      json sj = json::array();
      for (const auto& con : sec) sj.push_back(constraintString(con));
      sectors.push_back(sj);
    }
    j["sectors"] = sectors;
  }
  if (!d.expectations.is_null()) j["expected_results"] = d.expectations;
  return j;
}

}  // namespace cubical
