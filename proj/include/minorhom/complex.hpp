#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "minorhom/graph.hpp"
#include "minorhom/snf.hpp"

namespace minorhom {

// Abstract simplicial complex over a labeled ground set, stored by its facets.
// The void complex (no faces at all) and the complex whose only face is the
// empty set are distinct and both representable.
class SimplicialComplex {
 public:
  static constexpr int kVoidDimension = std::numeric_limits<int>::min();

  // Facets are deduplicated and non-maximal entries dropped.  Every facet
  // label must belong to the ground set.  An empty facet list yields the void
  // complex; a single empty facet yields the empty-face-only complex.
  static SimplicialComplex from_facets(std::vector<std::string> ground,
                                       const std::vector<std::vector<std::string>>& facets);
  static SimplicialComplex void_complex(std::vector<std::string> ground);
  static SimplicialComplex empty_face_only(std::vector<std::string> ground);

  bool is_void() const { return facets_.empty(); }
  int dimension() const;  // kVoidDimension when void, -1 for {∅}

  const std::vector<std::string>& ground() const { return ground_; }
  int ground_index(const std::string& label) const;

  // Facets as sorted index vectors, in lexicographic order.
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  std::vector<std::vector<std::string>> facet_labels() const;

  // All faces of the given dimension, sorted lexicographically.  dim = -1
  // returns the empty face (once) iff the complex is not void.
  const std::vector<std::vector<int>>& faces(int dim) const;
  std::size_t face_count(int dim) const { return faces(dim).size(); }
  // Position of a face in faces(dim); -1 if absent.
  int face_index(const std::vector<int>& face) const;

  bool is_face(std::vector<int> face) const;
  bool is_face_labels(const std::vector<std::string>& labels) const;

  // f_vector()[k] = number of (k-1)-dimensional faces, starting with the
  // empty face: (f_{-1}, f_0, ..., f_dim).
  std::vector<std::size_t> f_vector() const;
  Int euler_characteristic() const;          // sum over faces of dim >= 0
  Int reduced_euler_characteristic() const;  // euler - 1 (0 for the void complex)

  // Induced subcomplex on a subset of the ground set.
  SimplicialComplex restricted_to(const std::vector<std::string>& subset) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.ground_ == b.ground_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<std::string> ground_;  // sorted
  std::map<std::string, int> gidx_;
  std::vector<std::vector<int>> facets_;
  mutable std::map<int, std::vector<std::vector<int>>> faces_cache_;
  mutable std::map<int, std::map<std::vector<int>, int>> index_cache_;
};

// Boundary matrices with the orientation induced by increasing ground labels.
// matrix(k) maps k-chains to (k-1)-chains; in the reduced complex the empty
// face spans an extra rank-one chain group in degree -1.  Holds a reference:
// the complex must outlive the boundary object.
class OrientedBoundary {
 public:
  OrientedBoundary(const SimplicialComplex& c, bool reduced)
      : complex_(&c), reduced_(reduced) {}

  std::size_t chain_dim(int k) const;
  const SparseIntMatrix& matrix(int k) const;  // C_k -> C_{k-1}
  bool squares_to_zero() const;                 // checks ∂∘∂ = 0 in all degrees
  bool reduced() const { return reduced_; }
  const SimplicialComplex& complex() const { return *complex_; }

 private:
  const SimplicialComplex* complex_;
  bool reduced_;
  mutable std::map<int, SparseIntMatrix> cache_;
};

// --- complexes attached to a graph -------------------------------------------

// Matching complex: edge sets in which every vertex has degree at most one.
// A loop gives its base vertex degree two, so loops never appear in a face.
SimplicialComplex matching_complex(const Graph& g);

// Bounded-degree complex: every vertex of the selected subgraph has degree at
// most d (loops count twice).  d = 1 recovers the matching complex.
SimplicialComplex d_matching_complex(const Graph& g, int d);

// Predicate on edge subsets of a fixed graph; must be downward closed.
using EdgeProperty = std::function<bool(const Graph&, const std::vector<std::string>&)>;

// The matching predicate (every vertex degree <= 1, loops counting twice),
// packaged for the property machinery.
EdgeProperty matching_property();
EdgeProperty d_matching_property(int d);

// Builds the complex of edge subsets satisfying the property, verifying
// downward closure along the way (throws NotMonotone with a witness).
SimplicialComplex monotone_property_complex(const Graph& g, const EdgeProperty& property,
                                            std::size_t max_edges = 16);

// Flag (clique) complex of the line graph; the Stanley-Reisner complex of the
// ideal generated by products of disjoint edge pairs.
SimplicialComplex flag_complex_of_line_graph(const Graph& g);

// A named complex construction G -> complex over E(G), functorial along minor
// morphisms via the induced edge injection.
struct ComplexBuilder {
  std::string name;
  std::function<SimplicialComplex(const Graph&)> build;
};

ComplexBuilder matching_builder();
ComplexBuilder d_matching_builder(int d);
ComplexBuilder flag_builder();

// Counterexample to the minor-compatibility of a property: a morphism under
// which the pulled-back edge set stops satisfying it.
struct GopMonotoneCounterexample {
  std::size_t morphism_index;
  std::vector<std::string> target_subset;  // satisfies the property on the target
  std::vector<std::string> pulled_back;    // fails it on the source
};

class MinorMorphism;  // defined in minor.hpp

std::vector<GopMonotoneCounterexample> check_gop_monotone(
    const EdgeProperty& property, const std::vector<MinorMorphism>& morphisms,
    std::size_t max_edges = 16);

// The simplicial map builder(phi.target()) -> builder(phi.source()) whose
// vertex map is the edge injection of the morphism.  Contravariant: minors
// give smaller complexes mapping into bigger ones.
struct InducedSimplicialMap {
  SimplicialComplex from;       // complex over the target graph's edges
  SimplicialComplex to;         // complex over the source graph's edges
  std::vector<int> ground_map;  // from-ground index -> to-ground index, injective
};

// Fails NotFunctorial when some facet image is not a face downstairs.
InducedSimplicialMap induced_simplicial_map(const MinorMorphism& phi,
                                            const ComplexBuilder& builder);

// Matrix of the chain map C_k(from) -> C_k(to).  The sign of a face image is
// the parity of the permutation sorting its labels.  With `reduced`, k = -1
// is the identity on the empty-face line.
SparseIntMatrix chain_map_matrix(const InducedSimplicialMap& m, int k, bool reduced);

}  // namespace minorhom
