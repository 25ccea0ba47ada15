#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubical/roller.hpp"
#include "cubical/simplicial.hpp"

namespace cubical {

// The three combinatorial boundaries of a finitely presented pocset, with the
// comparison maps between them.
class Boundaries {
 public:
  explicit Boundaries(const TieredPocset& t, long window = 0);

  const RollerCalculus& roller() const { return roller_; }

  // Vertices of the simplicial boundary: the minimal UBS classes.
  const std::vector<MinimalComponent>& minimalClasses() const { return minimals_; }
  // All UBS classes.
  const std::vector<UBSClass>& ubsClasses() const { return ubsClasses_; }
  // All Roller classes, sorted.
  const std::vector<RollerClass>& rollerClasses() const { return rollerClasses_; }

  // Simplicial boundary: one vertex per minimal class, one generating face
  // per UBS class (its component set), closed downward.
  SimplicialComplex simplicialBoundary() const;

  // Order complex of the Roller poset.
  SimplicialComplex rollerComplex() const;

  // Order complex of the UBS classes under commensurate containment.
  SimplicialComplex ubsComplex() const;

  // Vertex map of the umbra on UBS classes: index into rollerClasses().
  std::vector<int> umbraVertexMap() const;
  // Vertex map of the section on Roller classes: index into ubsClasses().
  std::vector<int> sectionVertexMap() const;

  struct MapChecks {
    bool umbraOrderPreserving = false;
    bool sectionOrderPreserving = false;
    bool sectionInjective = false;
    bool roundTripIdentity = false;   // umbra after section is the identity
    bool fibersConed = false;         // every umbra fiber is a cone under its section apex
    std::string detail;
  };
  MapChecks checkMaps() const;

  // The nerve pair identified by the main comparison: nerve of the cover of
  // the simplicial boundary by its maximal simplices, and nerve of the cover
  // of the Roller complex by the descending sets of the maximal classes.
  struct NervePair {
    SimplicialComplex nerveMaxSimplices;
    SimplicialComplex nerveRollerStars;
    bool isomorphic = false;
    std::string detail;
  };
  NervePair nervePair() const;

  // Cover of the order complex of the selected classes by the descending
  // sets of its maximal elements; every piece and every nonempty
  // intersection must be a cone.
  struct SigmaCover {
    SimplicialComplex nerve;
    bool covers = false;
    bool piecesConed = false;
    bool intersectionsConed = false;
  };
  SigmaCover sigmaCover(const std::vector<RollerClass>& selected) const;

  // Is every selected class l1-visible? Convenience for sigma covers.
  std::vector<RollerClass> l1VisibleClasses() const;

  std::string componentLabel(const MinimalComponent& c) const;
  std::string classLabel(const UBSClass& c) const;

 private:
  int componentIndex(const MinimalComponent& c) const;
  int rollerIndex(const RollerClass& v) const;

  const TieredPocset& t_;
  RollerCalculus roller_;
  std::vector<UBSClass> ubsClasses_;
  std::vector<MinimalComponent> minimals_;
  std::vector<RollerClass> rollerClasses_;
};

}  // namespace cubical
