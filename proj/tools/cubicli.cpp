#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubical/boundaries.hpp"
#include "cubical/cubecomplex.hpp"
#include "cubical/document.hpp"
#include "cubical/metric.hpp"
#include "cubical/titscone.hpp"

using namespace cubical;
using nlohmann::json;

namespace {

struct Options {
  long window = 0;
  double tol = 1e-6;
  std::uint64_t seed = 20260826;
  long budget = 8;
  std::string emit = "json";
  std::size_t cap = 1000000;
  std::string out;
};

void emitReport(const Options& opt, const json& report) {
  if (opt.out.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream f(opt.out);
    f << report.dump(2) << "\n";
  }
}

void emitText(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out);
    f << text;
  }
}

std::string orientationString(const CubeComplex& x, std::size_t v) {
  std::string s;
  for (int h = 0; h < x.hyperplanes(); ++h) {
    if (h) s += " ";
    s += x.pocset().name(h);
    s += sideChar(x.vertex(v).side(h));
  }
  return s;
}

CubeComplex realizeDoc(const Document& d, const Options& opt) {
  if (d.finite) return CubeComplex::realize(*d.finite, opt.cap);
  if (d.tiered) {
    if (opt.window <= 0)
      throw DomainError("a tiered document needs --window N to realize a truncation");
    return CubeComplex::realize(d.tiered->truncate(opt.window), opt.cap);
  }
  throw DomainError("document kind '" + d.kind + "' has no finite realization");
}

const TieredPocset& tieredOf(const Document& d, std::optional<TieredPocset>& storage) {
  if (d.tiered) return *d.tiered;
  if (d.cone) {
    storage = TitsCone(*d.cone).toTiered();
    return *storage;
  }
  throw DomainError("document kind '" + d.kind + "' has no tiered pocset");
}

std::set<int> familiesByName(const TieredPocset& t, const std::string& csv) {
  std::set<int> out;
  if (csv.empty()) {
    for (int f = 0; f < t.familyCount(); ++f) out.insert(f);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string name = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    bool found = false;
    for (int f = 0; f < t.familyCount(); ++f)
      if (t.familyName(f) == name) {
        out.insert(f);
        found = true;
      }
    if (!found) throw DomainError("unknown family '" + name + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

json bettiJson(const SimplicialComplex& s) {
  json j = json::array();
  for (long b : s.betti()) j.push_back(b);
  return j;
}

json complexJson(const SimplicialComplex& s) {
  json faces = json::array();
  for (const auto& f : s.maximalFaces()) {
    json face = json::array();
    for (int v : f) face.push_back(s.label(v));
    faces.push_back(face);
  }
  json j;
  j["vertices"] = s.labels();
  j["maximal_faces"] = faces;
  j["betti"] = bettiJson(s);
  return j;
}

std::string complexDot(const SimplicialComplex& s, const std::string& name) {
  std::string out = "graph \"" + name + "\" {\n";
  for (int v = 0; v < s.vertexCount(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + s.label(v) + "\"];\n";
  std::set<std::pair<int, int>> edges;
  for (const auto& f : s.maximalFaces())
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b) edges.insert({f[a], f[b]});
  for (auto& [a, b] : edges)
    out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

double maxPairDistance(MetricGeometry& g, const CubeComplex& x, double tol) {
  double best = 0;
  for (std::size_t a = 0; a < x.vertexCount(); ++a)
    for (std::size_t b = a + 1; b < x.vertexCount(); ++b)
      best = std::max(best, g.distance(a, b, tol).distance);
  return best;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---- verify-all ------------------------------------------------------------

struct Verifier {
  const Options& opt;
  json checks = json::array();
  bool ok = true;

  void check(const std::string& what, bool pass, const json& detail = {}) {
    json c;
    c["check"] = what;
    c["pass"] = pass;
    if (!detail.is_null()) c["detail"] = detail;
    checks.push_back(c);
    ok = ok && pass;
  }
};

void verifyFinite(const Document& d, Verifier& v) {
  CubeComplex x = CubeComplex::realize(*d.finite, v.opt.cap);
  const json& e = d.expectations;
  if (e.contains("vertices"))
    v.check("vertices", x.vertexCount() == e["vertices"].get<std::size_t>(),
            x.vertexCount());
  if (e.contains("dimension"))
    v.check("dimension", x.dimension() == e["dimension"].get<int>(), x.dimension());
  if (e.contains("cubes")) {
    auto census = x.cubeCensus();
    json got = json::array();
    for (auto c : census) got.push_back(c);
    v.check("cubes", got == e["cubes"], got);
  }
  if (e.contains("facing_triples"))
    v.check("facing_triples",
            d.finite->facingTuples(3).size() == e["facing_triples"].get<std::size_t>());
  if (e.contains("corner_distance") || e.contains("diagonal")) {
    MetricGeometry g(x);
    double want = e.contains("corner_distance") ? e["corner_distance"].get<double>()
                                                : e["diagonal"].get<double>();
    double got = maxPairDistance(g, x, v.opt.tol);
    v.check("extremal_distance", near(got, want, 1e-4), got);
  }
  // Duality round trip: the vertex set reconstructs the relation table.
  FinitePocset back = x.toPocset();
  bool same = back.size() == d.finite->size();
  for (int a = 0; same && a < back.size(); ++a)
    for (int b = 0; same && b < back.size(); ++b)
      if (a != b && !(back.rel(a, b) == d.finite->rel(a, b))) same = false;
  v.check("duality_round_trip", same);
}

void verifyTiered(const TieredPocset& t, const json& e, Verifier& v) {
  Boundaries b(t, v.opt.window);
  if (e.contains("roller_classes"))
    v.check("roller_classes", b.rollerClasses().size() == e["roller_classes"].get<std::size_t>(),
            b.rollerClasses().size());
  if (e.contains("ubs_classes"))
    v.check("ubs_classes", b.ubsClasses().size() == e["ubs_classes"].get<std::size_t>(),
            b.ubsClasses().size());
  if (e.contains("simplicial_boundary_betti"))
    v.check("simplicial_boundary_betti",
            bettiJson(b.simplicialBoundary()) == e["simplicial_boundary_betti"],
            bettiJson(b.simplicialBoundary()));
  if (e.contains("truncate4_vertices")) {
    CubeComplex x = CubeComplex::realize(t.truncate(4), v.opt.cap);
    v.check("truncate4_vertices",
            x.vertexCount() == e["truncate4_vertices"].get<std::size_t>(), x.vertexCount());
  }
  if (e.contains("dominant") || e.contains("components")) {
    std::set<int> all;
    for (int f = 0; f < t.familyCount(); ++f) all.insert(f);
    UBSCalculus calc(t, v.opt.window);
    UBSClass c = calc.minimalDecomposition(UBSDescriptor::tailsAtZero(all));
    if (e.contains("components"))
      v.check("components", c.dimension() == e["components"].get<int>(), c.dimension());
    if (e.contains("dominant")) {
      auto dom = calc.dominantComponents(c);
      json got = json::array();
      std::set<std::string> names;
      for (std::size_t i = 0; i < dom.size(); ++i)
        if (dom[i])
          for (int f : c.components[i].families) names.insert(t.familyName(f));
      for (const auto& n : names) got.push_back(n);
      v.check("dominant", got == e["dominant"], got);
    }
  }
  auto mc = b.checkMaps();
  v.check("umbra_order_preserving", mc.umbraOrderPreserving, mc.detail);
  v.check("section_order_preserving", mc.sectionOrderPreserving);
  v.check("section_injective", mc.sectionInjective);
  v.check("umbra_section_identity", mc.roundTripIdentity);
  v.check("umbra_fibers_coned", mc.fibersConed);
  auto np = b.nervePair();
  v.check("nerve_pair_isomorphic", np.isomorphic, np.detail);
  auto sc = b.sigmaCover(b.rollerClasses());
  v.check("sigma_cover", sc.covers && sc.piecesConed && sc.intersectionsConed);
  auto bs = b.simplicialBoundary().betti();
  auto br = b.rollerComplex().betti();
  auto bu = b.ubsComplex().betti();
  std::size_t n = std::max({bs.size(), br.size(), bu.size()});
  bs.resize(n, 0);
  br.resize(n, 0);
  bu.resize(n, 0);
  v.check("boundary_betti_agree", bs == br && bs == bu);
}

void verifyCone(const Document& d, Verifier& v) {
  TitsCone tc(*d.cone);
  const json& e = d.expectations;
  auto pats = tc.patterns();
  if (e.contains("patterns"))
    v.check("patterns", pats.size() == e["patterns"].get<std::size_t>(), pats.size());
  InfinityPattern full;
  for (const auto& p : pats)
    if (p.size() > full.size()) full = p;
  SphericalPolytope qf = tc.realization(full);
  if (e.contains("diameter"))
    v.check("diameter", near(tc.diameter(qf), e["diameter"].get<double>(), 1e-6),
            tc.diameter(qf));
  if (e.contains("base_length")) {
    SphericalPolytope base = tc.realization({0, 1});
    v.check("base_length", near(tc.diameter(base), e["base_length"].get<double>(), 1e-6),
            tc.diameter(base));
  }
  auto cf = tc.circumcenter(qf);
  if (e.contains("circumradius"))
    v.check("circumradius", near(cf.radius, e["circumradius"].get<double>(), 1e-6), cf.radius);
  if (e.contains("height")) {
    // Distance from the circumcenter to the fully supported vertex.
    double h = 0;
    for (const Vec& vert : qf.vertices) {
      bool fullSupport = true;
      for (int k = 0; k < d.cone->dim; ++k)
        if (std::abs(vert[k]) < 1e-9) fullSupport = false;
      if (fullSupport) h = arcDistance(cf.point, vert);
    }
    v.check("height", near(h, e["height"].get<double>(), 1e-6), h);
  }
  if (e.contains("max_visible"))
    v.check("max_visible", tc.maxVisiblePatterns().size() == e["max_visible"].get<std::size_t>());
  SimplicialComplex nerve = tc.visibilityNerve();
  if (e.contains("nerve_vertices"))
    v.check("nerve_vertices", nerve.vertexCount() == e["nerve_vertices"].get<int>());
  if (e.contains("nerve_betti"))
    v.check("nerve_betti", bettiJson(nerve) == e["nerve_betti"], bettiJson(nerve));
  // Spherical-geometry invariants on every realization.
  bool diamOk = true, radOk = true;
  const double kPi = std::acos(-1.0);
  for (const auto& p : pats) {
    SphericalPolytope q = tc.realization(p);
    if (q.empty()) continue;
    if (tc.diameter(q) > kPi / 2 + 1e-9) diamOk = false;
    if (tc.circumcenter(q).radius >= kPi / 2) radOk = false;
  }
  v.check("realization_diameters", diamOk);
  v.check("circumradii_below_right_angle", radOk);
  // The imported pocset's boundaries carry the same homology as the nerve.
  TieredPocset t = tc.toTiered();
  Boundaries b(t, v.opt.window);
  auto bn = nerve.betti();
  auto br = b.rollerComplex().betti();
  auto bs = b.simplicialBoundary().betti();
  std::size_t n = std::max({bn.size(), br.size(), bs.size()});
  bn.resize(n, 0);
  br.resize(n, 0);
  bs.resize(n, 0);
  v.check("nerve_betti_matches_boundaries", bn == br && bn == bs);
  verifyTiered(t, json::object(), v);
}

json verifyDocument(const Document& d, const Options& opt) {
  Verifier v{opt};
  if (d.finite) verifyFinite(d, v);
  if (d.tiered) verifyTiered(*d.tiered, d.expectations, v);
  if (d.cone) verifyCone(d, v);
  json r;
  r["name"] = d.name;
  r["kind"] = d.kind;
  r["checks"] = v.checks;
  r["pass"] = v.ok;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pocset duality, boundary, and cone geometry toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--window", opt.window, "index window for tiered computations (0 = automatic)");
  app.add_option("--tol", opt.tol, "metric tolerance");
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--budget", opt.budget, "restart budget for collapse searches");
  app.add_option("--emit", opt.emit, "output format: json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--cap", opt.cap, "vertex cap for realizations");
  app.add_option("--out", opt.out, "write the report to a file instead of stdout");

  std::string path, mode, families, pattern;
  std::vector<std::size_t> verts;

  auto* validate = app.add_subcommand("validate", "parse and validate a document");
  validate->add_option("file", path)->required();

  auto* realize = app.add_subcommand("realize", "realize the dual cube complex");
  realize->add_option("file", path)->required();

  auto* median = app.add_subcommand("median", "median of three vertices");
  median->add_option("file", path)->required();
  median->add_option("vertices", verts, "three vertex indices")->expected(3);

  auto* gate = app.add_subcommand("gate", "gate of a vertex in a convex hull");
  gate->add_option("file", path)->required();
  gate->add_option("vertices", verts, "vertex x, then the hull generators")->expected(-2);

  auto* ubs = app.add_subcommand("ubs", "UBS calculus on family tails");
  ubs->add_option("mode", mode)->required()->check(CLI::IsMember({"is", "prune", "decompose", "dominant"}));
  ubs->add_option("file", path)->required();
  ubs->add_option("--families", families, "comma-separated family names (default: all)");

  auto* roller = app.add_subcommand("roller", "Roller classes and their order");
  roller->add_option("mode", mode)->required()->check(CLI::IsMember({"classes", "poset", "visible"}));
  roller->add_option("file", path)->required();

  auto* boundary = app.add_subcommand("boundary", "boundary complexes and their maps");
  boundary->add_option("mode", mode)
      ->required()
      ->check(CLI::IsMember({"simplicial", "roller", "ubs", "verify"}));
  boundary->add_option("file", path)->required();

  auto* nerve = app.add_subcommand("nerve", "nerve constructions");
  nerve->add_option("mode", mode)->required()->check(CLI::IsMember({"pair", "sigma"}));
  nerve->add_option("file", path)->required();

  auto* metric = app.add_subcommand("metric", "Euclidean geometry of a realization");
  metric->add_option("mode", mode)->required()->check(CLI::IsMember({"dist", "wallqi"}));
  metric->add_option("file", path)->required();
  metric->add_option("vertices", verts, "vertex pair for dist")->expected(0, 2);

  auto* cone = app.add_subcommand("cone", "spherical cone geometry");
  cone->add_option("mode", mode)
      ->required()
      ->check(CLI::IsMember({"classes", "Q", "circumcenter", "pseudocenter", "nerve"}));
  cone->add_option("file", path)->required();
  cone->add_option("--pattern", pattern, "coordinate pattern, e.g. x,y");

  auto* verifyAll = app.add_subcommand("verify-all", "verify every fixture in a directory");
  verifyAll->add_option("dir", path)->required();

  for (auto* s : app.get_subcommands([](const CLI::App*) { return true; })) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verifyAll->parsed()) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(path))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      json reports = json::array();
      bool all = true;
      for (const auto& f : files) {
        Document d = loadDocument(f.string());
        json r = verifyDocument(d, opt);
        all = all && r["pass"].get<bool>();
        reports.push_back(r);
      }
      json top;
      top["seed"] = opt.seed;
      top["fixtures"] = reports;
      top["pass"] = all;
      emitReport(opt, top);
      return all ? 0 : 1;
    }

    Document d = loadDocument(path);
    std::optional<TieredPocset> storage;

    if (validate->parsed()) {
      json r;
      r["name"] = d.name;
      r["kind"] = d.kind;
      r["valid"] = true;
      emitReport(opt, r);
      return 0;
    }

    if (realize->parsed()) {
      CubeComplex x = realizeDoc(d, opt);
      if (opt.emit == "dot") {
        std::string out = "graph \"" + d.name + "\" {\n";
        for (std::size_t v = 0; v < x.vertexCount(); ++v)
          out += "  v" + std::to_string(v) + " [label=\"" + orientationString(x, v) + "\"];\n";
        for (std::size_t v = 0; v < x.vertexCount(); ++v)
          for (int h = 0; h < x.hyperplanes(); ++h) {
            std::size_t w = x.neighbor(v, h);
            if (w != CubeComplex::npos && w > v)
              out += "  v" + std::to_string(v) + " -- v" + std::to_string(w) + " [label=\"" +
                     x.pocset().name(h) + "\"];\n";
          }
        emitText(opt, out + "}\n");
        return 0;
      }
      json census = json::array();
      for (auto c : x.cubeCensus()) census.push_back(c);
      json r;
      r["name"] = d.name;
      r["vertices"] = x.vertexCount();
      r["dimension"] = x.dimension();
      r["cubes"] = census;
      r["maximal_cubes"] = x.maximalCubes().size();
      emitReport(opt, r);
      return 0;
    }

    if (median->parsed()) {
      CubeComplex x = realizeDoc(d, opt);
      std::size_t m = x.median(verts.at(0), verts.at(1), verts.at(2));
      json r;
      r["median"] = m;
      r["orientation"] = orientationString(x, m);
      emitReport(opt, r);
      return 0;
    }

    if (gate->parsed()) {
      CubeComplex x = realizeDoc(d, opt);
      std::vector<std::size_t> target(verts.begin() + 1, verts.end());
      std::size_t g = x.gate(verts.at(0), x.hull(target));
      json r;
      r["gate"] = g;
      r["orientation"] = orientationString(x, g);
      r["distance"] = x.d1(verts.at(0), g);
      emitReport(opt, r);
      return 0;
    }

    if (ubs->parsed()) {
      const TieredPocset& t = tieredOf(d, storage);
      UBSCalculus calc(t, opt.window);
      UBSDescriptor s = UBSDescriptor::tailsAtZero(familiesByName(t, families));
      json r;
      r["name"] = d.name;
      r["families"] = json::array();
      for (int f : s.tailFamilies()) r["families"].push_back(t.familyName(f));
      if (mode == "is") {
        UBSWitness w;
        bool is = calc.isUBS(s, &w);
        r["is_ubs"] = is;
        if (!is) {
          r["witness"]["reason"] = w.reason;
          r["witness"]["hyperplanes"] = json::array();
          for (const auto& h : w.hyps)
            r["witness"]["hyperplanes"].push_back(t.familyName(h.family) +
                                                  std::to_string(h.index));
        }
        emitReport(opt, r);
        return is ? 0 : 1;
      }
      if (mode == "prune") {
        UBSDescriptor p = calc.prune(s);
        r["tails"] = json::object();
        for (auto& [f, start] : p.tails) r["tails"][t.familyName(f)] = start;
        emitReport(opt, r);
        return 0;
      }
      Boundaries b(t, opt.window);
      UBSClass c = calc.minimalDecomposition(s);
      r["components"] = json::array();
      for (const auto& comp : c.components) r["components"].push_back(b.componentLabel(comp));
      if (mode == "dominant") {
        auto dom = calc.dominantComponents(c);
        r["dominant"] = json::array();
        for (std::size_t i = 0; i < dom.size(); ++i)
          if (dom[i]) r["dominant"].push_back(b.componentLabel(c.components[i]));
      }
      emitReport(opt, r);
      return 0;
    }

    if (roller->parsed()) {
      const TieredPocset& t = tieredOf(d, storage);
      Boundaries b(t, opt.window);
      const auto& classes = b.rollerClasses();
      if (mode == "visible") {
        json r;
        r["visible"] = json::array();
        for (const auto& v : b.l1VisibleClasses())
          r["visible"].push_back(b.roller().fingerprintString(v));
        emitReport(opt, r);
        return 0;
      }
      if (opt.emit == "dot" || mode == "poset") {
        if (opt.emit == "dot") {
          std::string out = "digraph \"" + d.name + "\" {\n";
          for (std::size_t i = 0; i < classes.size(); ++i)
            out += "  c" + std::to_string(i) + " [label=\"" +
                   b.roller().fingerprintString(classes[i]) + "\"];\n";
          for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = 0; j < classes.size(); ++j)
              if (i != j && rollerLeq(classes[i], classes[j]))
                out += "  c" + std::to_string(i) + " -> c" + std::to_string(j) + ";\n";
          emitText(opt, out + "}\n");
          return 0;
        }
        json r;
        r["classes"] = json::array();
        for (const auto& v : classes) r["classes"].push_back(b.roller().fingerprintString(v));
        r["edges"] = json::array();
        for (std::size_t i = 0; i < classes.size(); ++i)
          for (std::size_t j = 0; j < classes.size(); ++j)
            if (i != j && rollerLeq(classes[i], classes[j]))
              r["edges"].push_back({b.roller().fingerprintString(classes[i]),
                                    b.roller().fingerprintString(classes[j])});
        emitReport(opt, r);
        return 0;
      }
      json r;
      r["count"] = classes.size();
      r["classes"] = json::array();
      for (const auto& v : classes) r["classes"].push_back(b.roller().fingerprintString(v));
      emitReport(opt, r);
      return 0;
    }

    if (boundary->parsed()) {
      const TieredPocset& t = tieredOf(d, storage);
      Boundaries b(t, opt.window);
      if (mode == "verify") {
        Verifier v{opt};
        verifyTiered(t, d.expectations, v);
        json r;
        r["name"] = d.name;
        r["checks"] = v.checks;
        r["pass"] = v.ok;
        emitReport(opt, r);
        return v.ok ? 0 : 1;
      }
      SimplicialComplex s = mode == "simplicial" ? b.simplicialBoundary()
                            : mode == "roller"   ? b.rollerComplex()
                                                 : b.ubsComplex();
      if (opt.emit == "dot") {
        emitText(opt, complexDot(s, d.name + ":" + mode));
        return 0;
      }
      emitReport(opt, complexJson(s));
      return 0;
    }

    if (nerve->parsed()) {
      const TieredPocset& t = tieredOf(d, storage);
      Boundaries b(t, opt.window);
      if (mode == "pair") {
        auto np = b.nervePair();
        json r;
        r["nerve_of_maximal_simplices"] = complexJson(np.nerveMaxSimplices);
        r["nerve_of_descending_sets"] = complexJson(np.nerveRollerStars);
        r["isomorphic"] = np.isomorphic;
        if (!np.detail.empty()) r["detail"] = np.detail;
        emitReport(opt, r);
        return np.isomorphic ? 0 : 1;
      }
      auto sc = b.sigmaCover(b.rollerClasses());
      json r;
      r["nerve"] = complexJson(sc.nerve);
      r["covers"] = sc.covers;
      r["pieces_coned"] = sc.piecesConed;
      r["intersections_coned"] = sc.intersectionsConed;
      emitReport(opt, r);
      return sc.covers && sc.piecesConed && sc.intersectionsConed ? 0 : 1;
    }

    if (metric->parsed()) {
      CubeComplex x = realizeDoc(d, opt);
      MetricGeometry g(x);
      json r;
      if (mode == "dist") {
        std::size_t a = verts.size() > 0 ? verts[0] : x.baseVertex();
        std::size_t b = verts.size() > 1 ? verts[1] : x.vertexCount() - 1;
        auto e = g.distance(a, b, opt.tol);
        r["from"] = a;
        r["to"] = b;
        r["distance"] = e.distance;
        r["grid_estimate"] = e.gridEstimate;
        r["exact_shortcut"] = e.exactShortcut;
        r["wall_length"] = g.wallLength(a, b);
      } else {
        auto fit = g.wallCountCheck(std::max(opt.tol, 1e-4));
        r["lambda0"] = fit.lambda0;
        r["max_wall_over_metric"] = fit.maxRatioWallOverMetric;
        r["max_metric_over_wall"] = fit.maxRatioMetricOverWall;
        r["pairs"] = fit.pairs;
      }
      emitReport(opt, r);
      return 0;
    }

    if (cone->parsed()) {
      if (!d.cone) throw DomainError("document kind '" + d.kind + "' is not a cone");
      TitsCone tc(*d.cone);
      InfinityPattern v;
      if (!pattern.empty()) {
        static const std::map<char, int> coords = {{'x', 0}, {'y', 1}, {'z', 2}, {'w', 3}};
        for (char ch : pattern) {
          if (ch == ',') continue;
          auto it = coords.find(ch);
          if (it == coords.end()) throw DomainError("bad coordinate in pattern");
          v.insert(it->second);
        }
      } else {
        for (const auto& p : tc.patterns())
          if (p.size() > v.size()) v = p;
      }
      json r;
      if (mode == "classes") {
        r["patterns"] = json::array();
        for (const auto& p : tc.patterns()) r["patterns"].push_back(tc.patternString(p));
        r["visible"] = json::array();
        for (const auto& p : tc.visiblePatterns()) r["visible"].push_back(tc.patternString(p));
        r["max_visible"] = json::array();
        for (const auto& p : tc.maxVisiblePatterns())
          r["max_visible"].push_back(tc.patternString(p));
      } else if (mode == "Q") {
        SphericalPolytope q = tc.realization(v);
        r["pattern"] = tc.patternString(v);
        r["vertices"] = json::array();
        for (const Vec& p : q.vertices) r["vertices"].push_back({p[0], p[1], p[2], p[3]});
        r["diameter"] = tc.diameter(q);
      } else if (mode == "circumcenter") {
        auto c = tc.circumcenter(tc.realization(v));
        r["pattern"] = tc.patternString(v);
        r["center"] = {c.point[0], c.point[1], c.point[2], c.point[3]};
        r["radius"] = c.radius;
      } else if (mode == "pseudocenter") {
        Vec p = tc.pseudocenter(v);
        r["pattern"] = tc.patternString(v);
        r["point"] = {p[0], p[1], p[2], p[3]};
        r["deep_set"] = tc.patternString(tc.deepSet(p));
      } else {
        SimplicialComplex n = tc.visibilityNerve();
        if (opt.emit == "dot") {
          emitText(opt, complexDot(n, d.name + ":nerve"));
          return 0;
        }
        r = complexJson(n);
      }
      emitReport(opt, r);
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
