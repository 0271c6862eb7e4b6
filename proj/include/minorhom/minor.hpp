#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minorhom/graph.hpp"

namespace minorhom {

enum class EdgeFate { Kept, Contracted, Deleted };

// Image of one source edge: a target edge (with an arrow twist), the target
// vertex its end-fiber collapses to, or nothing.
struct EdgeImage {
  EdgeFate fate = EdgeFate::Deleted;
  std::string image;   // target edge id when kept, target vertex id when contracted
  bool twist = false;  // kept only: the positive arrow maps to the reversed arrow

  friend auto operator<=>(const EdgeImage&, const EdgeImage&) = default;
};

struct AxiomViolation {
  int axiom;  // 1..7, see validate()
  std::string detail;
};

// A candidate minor morphism source -> target, stored as a vertex map plus a
// per-edge fate.  The arrow-level map is recovered from the twist bits, the
// basepoint goes to the basepoint, so three of the seven axioms hold by
// construction; validate() checks the remaining four and reports violations
// instead of throwing.  The constructor only enforces referential integrity
// (every id mentioned exists, every source vertex and edge covered once).
class MinorMorphism {
 public:
  MinorMorphism(Graph source, Graph target, std::map<std::string, std::string> vertex_map,
                std::map<std::string, EdgeImage> edge_map);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  const std::map<std::string, std::string>& vertex_map() const { return vertex_map_; }
  const std::map<std::string, EdgeImage>& edge_map() const { return edge_map_; }

  // Axioms, numbered:
  //   1 basepoint fixed                    (structural here, never reported)
  //   2 vertices map to vertices           (structural here, never reported)
  //   3 every target arrow has exactly one preimage arrow
  //   4 kept arrows commute with head and tail
  //   5 a collapsed edge has both endpoints mapping to its image vertex
  //   6 every vertex fiber is the vertex-and-edge set of a tree
  //   7 compatibility with the arrow involution (structural, never reported)
  std::vector<AxiomViolation> validate() const;
  bool is_valid() const { return validate().empty(); }

  // Image of an arrow of a kept edge; Mismatch for contracted/deleted edges.
  Arrow arrow_image(const Arrow& a) const;

  friend bool operator==(const MinorMorphism& a, const MinorMorphism& b);
  friend bool operator<(const MinorMorphism& a, const MinorMorphism& b);

 private:
  Graph source_;
  Graph target_;
  std::map<std::string, std::string> vertex_map_;
  std::map<std::string, EdgeImage> edge_map_;
};

MinorMorphism identity_morphism(const Graph& g);

// Elementary minors together with their witnessing morphisms.
std::pair<Graph, MinorMorphism> delete_edge(const Graph& g, const std::string& edge);
std::pair<Graph, MinorMorphism> contract_edge(const Graph& g, const std::string& edge);

// Diagrammatic order: first : G -> G', second : G' -> G''.
MinorMorphism compose(const MinorMorphism& first, const MinorMorphism& second);

// The injection E(target) -> E(source) picking each edge's unique kept preimage.
std::map<std::string, std::string> edge_injection(const MinorMorphism& phi);

// Complete, duplicate-free, canonically ordered list of minor morphisms
// g -> target.  Search splits the edge set into contracted (a spanning forest
// piece), kept (bijective onto the target edges) and deleted parts.
std::vector<MinorMorphism> enumerate_minor_morphisms(const Graph& g, const Graph& target,
                                                     std::size_t max_edges = 9);

}  // namespace minorhom
