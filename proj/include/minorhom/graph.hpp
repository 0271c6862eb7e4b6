#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "minorhom/error.hpp"
#include "minorhom/numeric.hpp"

namespace minorhom {

// Finite connected multigraph.  Loops and parallel edges are allowed.  Each
// edge carries a user-visible string id; the two arrows of edge e are (e,+)
// and (e,-), where (e,+) runs from ends().first to ends().second.  The arrow
// involution flips polarity, so it is fixed-point free even on loops.
struct EdgeSpec {
  std::string id;
  std::string u;
  std::string v;
};

struct Arrow {
  int edge = -1;
  bool rev = false;

  friend bool operator==(const Arrow& a, const Arrow& b) {
    return a.edge == b.edge && a.rev == b.rev;
  }
  friend bool operator<(const Arrow& a, const Arrow& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.rev < b.rev;
  }
};

class Graph {
 public:
  Graph() = default;  // the void graph; only used as a placeholder

  // Validates ids, uniqueness and connectivity.
  static Graph make(const std::vector<std::string>& vertex_ids,
                    const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edge_ids_.size(); }
  std::size_t arrow_count() const { return 2 * edge_ids_.size(); }

  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::string>& edge_ids() const { return edge_ids_; }

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const { return vidx_.count(id) > 0; }
  bool has_edge(const std::string& id) const { return eidx_.count(id) > 0; }

  // Endpoints as vertex indices, first <= second.
  std::pair<int, int> ends(int edge) const { return ends_[edge]; }
  std::pair<std::string, std::string> edge_ends(const std::string& id) const;
  bool is_loop(int edge) const { return ends_[edge].first == ends_[edge].second; }

  int tail(Arrow a) const { return a.rev ? ends_[a.edge].second : ends_[a.edge].first; }
  int head(Arrow a) const { return a.rev ? ends_[a.edge].first : ends_[a.edge].second; }
  static Arrow flip(Arrow a) { return Arrow{a.edge, !a.rev}; }

  // Edges incident to a vertex (loops listed once).
  const std::vector<int>& edges_at(int vertex) const { return incidence_[vertex]; }
  // Degree with loops counting 2.
  int degree(int vertex) const;
  int loops_at(int vertex) const;

  // First Betti number e - v + 1 of a connected graph.
  long genus() const {
    return static_cast<long>(edge_count()) - static_cast<long>(vertex_count()) + 1;
  }

  // Deterministic label-dependent key; equal iff the labeled graphs are equal.
  std::string labeled_key() const;

  Graph relabeled(const std::map<std::string, std::string>& vertex_map,
                  const std::map<std::string, std::string>& edge_map) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.edge_ids_ == b.edge_ids_ && a.ends_ == b.ends_;
  }

 private:
  std::vector<std::string> vertex_ids_;  // sorted
  std::vector<std::string> edge_ids_;    // sorted
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::vector<int>> incidence_;
  std::map<std::string, int> vidx_;
  std::map<std::string, int> eidx_;
};

// Simple graph on labeled vertices; no loops, no parallel edges.  Need not be
// connected (line-graph complements rarely are).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::vector<std::string> vertices,
              std::vector<std::pair<std::string, std::string>> edges);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  // Each pair sorted, list sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<std::pair<std::string, std::string>> edge_labels() const;

  int vertex_index(const std::string& id) const;
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  std::size_t component_count() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertex_ids_;  // sorted
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::map<std::string, int> vidx_;
};

// --- standard families -----------------------------------------------------

Graph complete_graph(long n);
Graph complete_bipartite_graph(long m, long n);
Graph path_graph(long n_edges);
Graph cycle_graph(long n_edges);  // cycle_graph(1) is a single loop
Graph star_graph(long n_leaves);
// n pairs of parallel edges e_i, f_i from v_i to a hub; a wedge of n circles.
Graph loop_bouquet(long n);
// Two centers joined by edge "c"; a leaves on one side, b on the other.
Graph two_star_tree(long a, long b);

// Dispatcher used by the CLI: kind in {complete, complete_bipartite, path,
// cycle, star, loop_bouquet, two_star_tree}.
Graph standard_graph(const std::string& kind, long a, long b = -1);

// --- derived graphs ----------------------------------------------------------

// Two distinct edges of G are adjacent in L(G) iff they share a vertex (the
// vertex set of a loop is its single base vertex).
SimpleGraph line_graph(const Graph& g);
// Complement: adjacent iff the endpoint sets are disjoint.
SimpleGraph complement_line_graph(const Graph& g);

// --- counting ---------------------------------------------------------------

Int spanning_tree_count(const Graph& g);  // matrix-tree determinant
std::vector<std::vector<std::string>> spanning_tree_list(const Graph& g);

// Automorphism: a pair of vertex- and edge-bijections commuting with the
// incidence structure.  `twists` holds the loop edges whose arrow pair is
// swapped (orientation reversal); for non-loop edges the arrow images are
// forced by the vertex map.
struct Automorphism {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
  std::set<std::string> twists;

  friend bool operator<(const Automorphism& a, const Automorphism& b) {
    if (a.vertex_map != b.vertex_map) return a.vertex_map < b.vertex_map;
    if (a.edge_map != b.edge_map) return a.edge_map < b.edge_map;
    return a.twists < b.twists;
  }
  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.vertex_map == b.vertex_map && a.edge_map == b.edge_map && a.twists == b.twists;
  }
};

struct AutomorphismGroup {
  Int order = 0;
  std::vector<Automorphism> elements;
};

AutomorphismGroup automorphisms(const Graph& g, std::size_t max_vertices = 10);

}  // namespace minorhom
