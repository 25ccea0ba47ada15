#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubical/types.hpp"

namespace cubical {

// Finite abstract simplicial complex with labelled vertices. Faces are kept
// as sorted vertex-index vectors; the maximal faces determine the complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  int vertexCount() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> vertexByLabel(const std::string& l) const;
  int addVertex(const std::string& label);

  // Adds a face together with all of its subfaces.
  void addFace(std::vector<int> face);
  bool hasFace(std::vector<int> face) const;
  const std::set<std::vector<int>>& maximalFaces() const { return maximal_; }
  // Every face, grouped by dimension; index d holds the d-faces.
  std::vector<std::vector<std::vector<int>>> facesByDim(std::size_t faceCap = 2000000) const;
  int dimension() const;
  bool empty() const { return maximal_.empty(); }

  // Restriction to a vertex subset, keeping every face whose vertices all lie
  // in the subset (full subcomplex). Labels are inherited.
  SimplicialComplex fullSubcomplex(const std::set<int>& verts) const;
  std::set<int> vertexSet() const;

  // Is every maximal face incident to the apex, i.e. is the complex the cone
  // with that apex over the rest?
  bool isConeWithApex(int apex) const;
  // Some apex making the complex a cone, if one exists.
  std::optional<int> coneApex() const;

  // Reduced-by-nothing Betti numbers, one vector entry per dimension
  // 0..dim. `mod2` switches between exact rational rank and GF(2) rank.
  std::vector<long> betti(bool mod2 = false) const;

  // Greedy free-face collapse with seeded random restarts. Returns the
  // elementary collapse sequence when the complex collapses to a point.
  struct Collapse {
    bool collapsed = false;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> steps;  // (free face, coface)
  };
  Collapse collapseCertificate(std::uint64_t seed, int restarts = 8) const;
  // Replays a collapse sequence, verifying each step.
  bool verifyCollapse(const Collapse& c) const;

  bool operator==(const SimplicialComplex& o) const {
    return labels_ == o.labels_ && maximal_ == o.maximal_;
  }

 private:
  std::vector<std::string> labels_;
  std::set<std::vector<int>> maximal_;
};

// Order complex of a finite poset given by its strict order relation
// less(a, b). Vertices inherit the supplied labels; k-faces are the
// (k+1)-chains.
SimplicialComplex orderComplex(const std::vector<std::string>& labels,
                               const std::vector<std::vector<char>>& less);

// Nerve of a cover of a complex by subcomplexes, each given by its vertex
// set inside the ambient complex. Faces record nonempty intersections of
// the closed pieces, which for full subcomplexes reduce to shared vertices.
SimplicialComplex nerveOfVertexSets(const std::vector<std::string>& pieceLabels,
                                    const std::vector<std::set<int>>& pieces);

// Barycentric subdivision: vertices are the faces of s, simplices the chains
// of faces under inclusion.
SimplicialComplex barycentric(const SimplicialComplex& s);

// Complementary complex inside the barycentric subdivision: the full
// subcomplex of barycentric(ambient) spanned by barycenters of faces NOT in
// sigma. `sigma` is a set of faces of the ambient complex.
SimplicialComplex complementaryComplex(const SimplicialComplex& ambient,
                                       const std::set<std::vector<int>>& sigma);

// Do the open complements U_sigma_i = ambient' minus T_sigma_i have a common
// point? Holds iff some chain of ambient faces meets every sigma_i.
bool openComplementsIntersect(const SimplicialComplex& ambient,
                              const std::vector<std::set<std::vector<int>>>& sigmas);

// Do the subcomplexes spanned by the given face sets (closed simplices)
// intersect? For full subcomplexes this is a shared face test.
bool closedPiecesIntersect(const std::vector<std::set<std::vector<int>>>& sigmas);

}  // namespace cubical
