#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "minorhom/graph.hpp"
#include "minorhom/minor.hpp"

namespace minorhom {

// Canonical relabeling of a connected multigraph: the lexicographically
// smallest sorted edge-index multiset over vertex permutations (loops as
// doubled indices).  Permutations are pruned by degree-profile classes.
std::vector<std::pair<int, int>> canonical_edges(const Graph& g);

// Stable one-line form of canonical_edges, equal exactly for isomorphic
// graphs; used to deduplicate enumeration and to key scan reports.
std::string graph_signature(const Graph& g);

// One representative per isomorphism class of connected multigraphs with
// 1..max_edges edges (max_edges <= 8), ordered by edge count then signature.
// The zero-edge point graph is not listed, though the scans below still use
// it as a minor target; simple_only drops loops and parallel edges.
std::vector<Graph> enumerate_graphs(std::size_t max_edges, bool simple_only = false);

// A graph invariant together with the maps induced by minor morphisms, always
// over the rationals.  `induced` maps a morphism G -> G' to the matrix of
// M(G') -> M(G) (dimension(G) rows); it may be empty for evaluators that are
// only ever used for dimension counts.
struct ModuleEvaluator {
  std::string name;
  std::function<long(const Graph&)> dimension;
  std::function<std::vector<std::vector<Rat>>(const MinorMorphism&)> induced;
};

ModuleEvaluator constant_module();
ModuleEvaluator edge_module();
// Homology of the matching complex in the given degree (unreduced ranks).
ModuleEvaluator matching_homology_module(int i);
ModuleEvaluator d_matching_homology_module(int d, int i);
// Spanning-tree count; dimension only.
ModuleEvaluator spanning_tree_module();
// Lookup by the names above ("constant", "edge", "matching-h1",
// "dmatching2-h0", "spanning-trees").
ModuleEvaluator module_by_name(const std::string& name);

// Flat, deterministic scan output: one row per graph plus summary extremes.
struct ScanReport {
  std::string family;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::map<std::string, std::string> extremes;
  bool all_passed = true;
};

// For every graph with N < |E| <= max_edges, checks whether the images of the
// induced maps from all minors with <= N edges span M(G); rows report the
// span deficit.  Scans fan the per-graph work out over `jobs` workers and
// merge rows back in canonical graph order, so reports do not depend on the
// worker count.
ScanReport generation_scan(const ModuleEvaluator& m, int n_edges, std::size_t max_edges,
                           int jobs = 1);

// Verifies |Hom(G, target)| <= |Aut(target)| C(e, e') C(e - e', g - g') for
// every G with at most max_edges edges.
ScanReport dimension_bound_check(const Graph& target, std::size_t max_edges, int jobs = 1);

// Integral torsion of H_i of the degree-d matching complex across a family:
// all connected multigraphs with <= bound edges, or complete graphs K_2..K_n
// with bound read as the largest n when only == "complete".  Every scanned
// complex is also checked for universal-coefficient consistency at p = 2, 3.
// The reported maximum exponent is an observation about the scanned family,
// not a bound.
ScanReport torsion_scan(int i, int d, std::size_t bound, bool simple_only = false,
                        const std::string& only = "", int jobs = 1);

// Leaves attached to chosen vertices / chosen edges subdivided, all by the
// same count n.
struct GrowthFamily {
  Graph base;
  std::vector<std::string> sprout_vertices;
  std::vector<std::string> subdivide_edges;
};

Graph sprout(const Graph& g, const std::map<std::string, long>& leaves_at);
Graph subdivide(const Graph& g, const std::map<std::string, long>& cuts_at);
Graph growth_member(const GrowthFamily& family, long n);

// Exact interpolation of n -> dimension(member(n)) over the window.  The fit
// must leave slack in the window (degree <= window size - 2) and must predict
// the two values past the window exactly; otherwise NoFit.  Coefficients are
// listed lowest degree first.
struct GrowthFit {
  std::vector<Rat> coefficients;
  long window_lo = 0;
  long window_hi = 0;
  std::vector<long> window_values;
  std::vector<long> predicted;  // values at window_hi + 1, window_hi + 2
};

GrowthFit growth_fit(const ModuleEvaluator& m, const GrowthFamily& family, long window_lo,
                     long window_hi);

// Tree of a balanced parenthesis word: a left parenthesis climbs to a fresh
// vertex, a right parenthesis backtracks.  Vertices v0..vr, edges e1..er.
Graph dyck_tree(const std::string& word);

// Coefficients of sum_w dim M(T(w)) t^{r(w)} over all Dyck words w of
// semilength r(w) <= n_max (<= 8).
std::vector<long long> hd_series(const ModuleEvaluator& m, int n_max);

}  // namespace minorhom
