#include "minorhom/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace minorhom {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Graph Graph::make(const std::vector<std::string>& vertex_ids,
                  const std::vector<EdgeSpec>& edges) {
  if (vertex_ids.empty()) fail(ErrorKind::InvalidSize, "a graph needs at least one vertex");
  Graph g;
  g.vertex_ids_ = vertex_ids;
  std::sort(g.vertex_ids_.begin(), g.vertex_ids_.end());
  for (std::size_t i = 0; i + 1 < g.vertex_ids_.size(); ++i)
    if (g.vertex_ids_[i] == g.vertex_ids_[i + 1])
      fail(ErrorKind::DuplicateVertexId, g.vertex_ids_[i]);
  for (std::size_t i = 0; i < g.vertex_ids_.size(); ++i) g.vidx_[g.vertex_ids_[i]] = (int)i;

  std::vector<EdgeSpec> sorted = edges;
  std::sort(sorted.begin(), sorted.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (const EdgeSpec& e : sorted) {
    if (g.eidx_.count(e.id)) fail(ErrorKind::DuplicateEdgeId, e.id);
    // Edge ids share one namespace with vertex ids so that morphism images
    // ("this edge went to vertex x" vs "to edge x") stay unambiguous.
    if (g.vidx_.count(e.id))
      fail(ErrorKind::DuplicateEdgeId, e.id + " is already a vertex id");
    auto iu = g.vidx_.find(e.u);
    auto iv = g.vidx_.find(e.v);
    if (iu == g.vidx_.end()) fail(ErrorKind::UnknownVertex, e.u + " (edge " + e.id + ")");
    if (iv == g.vidx_.end()) fail(ErrorKind::UnknownVertex, e.v + " (edge " + e.id + ")");
    int a = iu->second, b = iv->second;
    if (a > b) std::swap(a, b);
    g.eidx_[e.id] = (int)g.edge_ids_.size();
    g.edge_ids_.push_back(e.id);
    g.ends_.emplace_back(a, b);
  }

  g.incidence_.assign(g.vertex_count(), {});
  Dsu dsu(g.vertex_count());
  for (std::size_t e = 0; e < g.ends_.size(); ++e) {
    auto [a, b] = g.ends_[e];
    g.incidence_[a].push_back((int)e);
    if (b != a) g.incidence_[b].push_back((int)e);
    dsu.unite(a, b);
  }
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (dsu.find((int)v) != dsu.find(0))
      fail(ErrorKind::Disconnected, "vertex " + g.vertex_ids_[v] + " unreachable");
  return g;
}

int Graph::vertex_index(const std::string& id) const {
  auto it = vidx_.find(id);
  if (it == vidx_.end()) fail(ErrorKind::UnknownVertex, id);
  return it->second;
}

int Graph::edge_index(const std::string& id) const {
  auto it = eidx_.find(id);
  if (it == eidx_.end()) fail(ErrorKind::UnknownEdge, id);
  return it->second;
}

std::pair<std::string, std::string> Graph::edge_ends(const std::string& id) const {
  auto [a, b] = ends_[edge_index(id)];
  return {vertex_ids_[a], vertex_ids_[b]};
}

int Graph::degree(int vertex) const {
  int d = 0;
  for (int e : incidence_[vertex]) d += is_loop(e) ? 2 : 1;
  return d;
}

int Graph::loops_at(int vertex) const {
  int d = 0;
  for (int e : incidence_[vertex]) d += is_loop(e) ? 1 : 0;
  return d;
}

std::string Graph::labeled_key() const {
  std::ostringstream out;
  out << "V{";
  for (const auto& v : vertex_ids_) out << v << ";";
  out << "}E{";
  for (std::size_t e = 0; e < edge_ids_.size(); ++e)
    out << edge_ids_[e] << "=" << vertex_ids_[ends_[e].first] << ":"
        << vertex_ids_[ends_[e].second] << ";";
  out << "}";
  return out.str();
}

Graph Graph::relabeled(const std::map<std::string, std::string>& vertex_map,
                       const std::map<std::string, std::string>& edge_map) const {
  std::vector<std::string> vs;
  for (const auto& v : vertex_ids_) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) fail(ErrorKind::UnknownVertex, v + " missing from relabeling");
    vs.push_back(it->second);
  }
  std::vector<EdgeSpec> es;
  for (std::size_t e = 0; e < edge_ids_.size(); ++e) {
    auto it = edge_map.find(edge_ids_[e]);
    if (it == edge_map.end()) fail(ErrorKind::UnknownEdge, edge_ids_[e] + " missing from relabeling");
    es.push_back({it->second, vertex_map.at(vertex_ids_[ends_[e].first]),
                  vertex_map.at(vertex_ids_[ends_[e].second])});
  }
  return Graph::make(vs, es);
}

// --- SimpleGraph -------------------------------------------------------------

SimpleGraph::SimpleGraph(std::vector<std::string> vertices,
                         std::vector<std::pair<std::string, std::string>> edges) {
  vertex_ids_ = std::move(vertices);
  std::sort(vertex_ids_.begin(), vertex_ids_.end());
  for (std::size_t i = 0; i + 1 < vertex_ids_.size(); ++i)
    if (vertex_ids_[i] == vertex_ids_[i + 1]) fail(ErrorKind::DuplicateVertexId, vertex_ids_[i]);
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i) vidx_[vertex_ids_[i]] = (int)i;

  std::set<std::pair<int, int>> seen;
  for (auto& [us, vs] : edges) {
    auto iu = vidx_.find(us);
    auto iv = vidx_.find(vs);
    if (iu == vidx_.end()) fail(ErrorKind::UnknownVertex, us);
    if (iv == vidx_.end()) fail(ErrorKind::UnknownVertex, vs);
    int u = iu->second, v = iv->second;
    if (u == v) fail(ErrorKind::InvalidSize, "simple graph cannot carry a loop at " + us);
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;  // collapse duplicates
  }
  edges_.assign(seen.begin(), seen.end());
  adj_.assign(vertex_ids_.size(), {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
}

std::vector<std::pair<std::string, std::string>> SimpleGraph::edge_labels() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.emplace_back(vertex_ids_[u], vertex_ids_[v]);
  return out;
}

int SimpleGraph::vertex_index(const std::string& id) const {
  auto it = vidx_.find(id);
  if (it == vidx_.end()) fail(ErrorKind::UnknownVertex, id);
  return it->second;
}

bool SimpleGraph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::size_t SimpleGraph::component_count() const {
  if (vertex_ids_.empty()) return 0;
  Dsu dsu(vertex_ids_.size());
  std::size_t n = vertex_ids_.size();
  for (auto [u, v] : edges_)
    if (dsu.unite(u, v)) --n;
  return n;
}

// --- standard families -------------------------------------------------------

namespace {
std::string num(long i) { return std::to_string(i); }
}  // namespace

Graph complete_graph(long n) {
  if (n < 1) fail(ErrorKind::InvalidSize, "complete graph needs n >= 1");
  std::vector<std::string> vs;
  for (long i = 1; i <= n; ++i) vs.push_back("v" + num(i));
  std::vector<EdgeSpec> es;
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j)
      es.push_back({"e" + num(i) + "_" + num(j), "v" + num(i), "v" + num(j)});
  return Graph::make(vs, es);
}

Graph complete_bipartite_graph(long m, long n) {
  if (m < 1 || n < 1) fail(ErrorKind::InvalidSize, "complete bipartite graph needs m, n >= 1");
  std::vector<std::string> vs;
  for (long i = 1; i <= m; ++i) vs.push_back("u" + num(i));
  for (long j = 1; j <= n; ++j) vs.push_back("w" + num(j));
  std::vector<EdgeSpec> es;
  for (long i = 1; i <= m; ++i)
    for (long j = 1; j <= n; ++j)
      es.push_back({"e" + num(i) + "_" + num(j), "u" + num(i), "w" + num(j)});
  return Graph::make(vs, es);
}

Graph path_graph(long n_edges) {
  if (n_edges < 1) fail(ErrorKind::InvalidSize, "path needs >= 1 edge");
  std::vector<std::string> vs;
  for (long i = 1; i <= n_edges + 1; ++i) vs.push_back("v" + num(i));
  std::vector<EdgeSpec> es;
  for (long i = 1; i <= n_edges; ++i)
    es.push_back({"e" + num(i), "v" + num(i), "v" + num(i + 1)});
  return Graph::make(vs, es);
}

Graph cycle_graph(long n_edges) {
  if (n_edges < 1) fail(ErrorKind::InvalidSize, "cycle needs >= 1 edge");
  std::vector<std::string> vs;
  for (long i = 1; i <= n_edges; ++i) vs.push_back("v" + num(i));
  std::vector<EdgeSpec> es;
  for (long i = 1; i <= n_edges; ++i)
    es.push_back({"e" + num(i), "v" + num(i), "v" + num(i % n_edges + 1)});
  return Graph::make(vs, es);
}

Graph star_graph(long n_leaves) {
  if (n_leaves < 1) fail(ErrorKind::InvalidSize, "star needs >= 1 leaf");
  std::vector<std::string> vs = {"c"};
  std::vector<EdgeSpec> es;
  for (long i = 1; i <= n_leaves; ++i) {
    vs.push_back("v" + num(i));
    es.push_back({"e" + num(i), "c", "v" + num(i)});
  }
  return Graph::make(vs, es);
}

Graph loop_bouquet(long n) {
  if (n < 1) fail(ErrorKind::InvalidSize, "loop bouquet needs n >= 1");
  std::vector<std::string> vs = {"h"};
  std::vector<EdgeSpec> es;
  for (long i = 1; i <= n; ++i) {
    vs.push_back("v" + num(i));
    es.push_back({"e" + num(i), "v" + num(i), "h"});
    es.push_back({"f" + num(i), "v" + num(i), "h"});
  }
  return Graph::make(vs, es);
}

Graph two_star_tree(long a, long b) {
  if (a < 0 || b < 0) fail(ErrorKind::InvalidSize, "two-star tree needs a, b >= 0");
  std::vector<std::string> vs = {"u", "w"};
  std::vector<EdgeSpec> es = {{"c", "u", "w"}};
  for (long i = 1; i <= a; ++i) {
    vs.push_back("u" + num(i));
    es.push_back({"a" + num(i), "u", "u" + num(i)});
  }
  for (long j = 1; j <= b; ++j) {
    vs.push_back("w" + num(j));
    es.push_back({"b" + num(j), "w", "w" + num(j)});
  }
  return Graph::make(vs, es);
}

Graph standard_graph(const std::string& kind, long a, long b) {
  auto need_two = [&](bool yes) {
    if (yes && b < 0) fail(ErrorKind::BadConfig, kind + " needs two size parameters");
    if (!yes && b >= 0) fail(ErrorKind::BadConfig, kind + " takes one size parameter");
  };
  if (kind == "complete") { need_two(false); return complete_graph(a); }
  if (kind == "complete_bipartite") { need_two(true); return complete_bipartite_graph(a, b); }
  if (kind == "path") { need_two(false); return path_graph(a); }
  if (kind == "cycle") { need_two(false); return cycle_graph(a); }
  if (kind == "star") { need_two(false); return star_graph(a); }
  if (kind == "loop_bouquet") { need_two(false); return loop_bouquet(a); }
  if (kind == "two_star_tree") { need_two(true); return two_star_tree(a, b); }
  fail(ErrorKind::BadConfig, "unknown standard graph kind: " + kind);
}

// --- line graphs -------------------------------------------------------------

namespace {
bool edges_share_vertex(const Graph& g, int e, int f) {
  auto [a, b] = g.ends(e);
  auto [c, d] = g.ends(f);
  return a == c || a == d || b == c || b == d;
}
}  // namespace

SimpleGraph line_graph(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (std::size_t f = e + 1; f < g.edge_count(); ++f)
      if (edges_share_vertex(g, (int)e, (int)f))
        edges.emplace_back(g.edge_ids()[e], g.edge_ids()[f]);
  return SimpleGraph(g.edge_ids(), edges);
}

SimpleGraph complement_line_graph(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (std::size_t f = e + 1; f < g.edge_count(); ++f)
      if (!edges_share_vertex(g, (int)e, (int)f))
        edges.emplace_back(g.edge_ids()[e], g.edge_ids()[f]);
  return SimpleGraph(g.edge_ids(), edges);
}

// --- spanning trees ----------------------------------------------------------

Int spanning_tree_count(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n == 1) return 1;
  // Reduced Laplacian (drop last row/column); loops do not contribute.
  std::size_t m = n - 1;
  std::vector<std::vector<Int>> a(m, std::vector<Int>(m, 0));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.ends((int)e);
    if (u == v) continue;
    if ((std::size_t)u < m) a[u][u] += 1;
    if ((std::size_t)v < m) a[v][v] += 1;
    if ((std::size_t)u < m && (std::size_t)v < m) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  // Bareiss fraction-free elimination.
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < m && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == m) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i)
      for (std::size_t j = k + 1; j < m; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  Int det = a[m - 1][m - 1] * sign;
  return det < 0 ? Int(-det) : det;
}

std::vector<std::vector<std::string>> spanning_tree_list(const Graph& g) {
  if (g.edge_count() > 30) fail(ErrorKind::TooLarge, "spanning tree enumeration capped at 30 edges");
  std::size_t n = g.vertex_count();
  std::vector<int> nonloop;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!g.is_loop((int)e)) nonloop.push_back((int)e);

  std::vector<std::vector<std::string>> out;
  std::vector<int> chosen;
  std::function<void(std::size_t, Dsu&)> rec = [&](std::size_t start, Dsu& dsu) {
    if (chosen.size() == n - 1) {
      std::vector<std::string> ids;
      for (int e : chosen) ids.push_back(g.edge_ids()[e]);
      out.push_back(ids);
      return;
    }
    for (std::size_t i = start; i < nonloop.size(); ++i) {
      int e = nonloop[i];
      auto [u, v] = g.ends(e);
      Dsu next = dsu;  // small n; copying keeps the backtracking simple
      if (!next.unite(u, v)) continue;
      chosen.push_back(e);
      rec(i + 1, next);
      chosen.pop_back();
    }
  };
  Dsu dsu(n);
  if (n == 1) {
    out.push_back({});
    return out;
  }
  rec(0, dsu);
  std::sort(out.begin(), out.end());
  return out;
}

// --- automorphisms -----------------------------------------------------------

namespace {

// Multiplicity table: key (min,max) -> edge indices, loops under (v,v).
std::map<std::pair<int, int>, std::vector<int>> parallel_classes(const Graph& g) {
  std::map<std::pair<int, int>, std::vector<int>> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) out[g.ends((int)e)].push_back((int)e);
  return out;
}

}  // namespace

AutomorphismGroup automorphisms(const Graph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices)
    fail(ErrorKind::TooLarge, "automorphism search capped at " + std::to_string(max_vertices) +
                                  " vertices");
  const std::size_t n = g.vertex_count();
  auto classes = parallel_classes(g);
  auto multiplicity = [&](int u, int v) -> std::size_t {
    auto it = classes.find({std::min(u, v), std::max(u, v)});
    return it == classes.end() ? 0 : it->second.size();
  };

  // Invariant used to prune vertex images.
  std::vector<std::pair<int, int>> inv(n);
  for (std::size_t v = 0; v < n; ++v) inv[v] = {g.degree((int)v), g.loops_at((int)v)};

  AutomorphismGroup group;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  // For one valid vertex permutation, expand every compatible edge bijection
  // (parallel edges permute freely, loops may additionally reverse).
  auto expand_edges = [&]() {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
    for (auto& [ends, src] : classes) {
      int a = image[ends.first], b = image[ends.second];
      if (a > b) std::swap(a, b);
      auto it = classes.find({a, b});
      if (it == classes.end() || it->second.size() != src.size()) return;  // incompatible
      blocks.push_back({src, it->second});
    }
    std::map<std::string, std::string> vmap;
    for (std::size_t v = 0; v < n; ++v) vmap[g.vertex_ids()[v]] = g.vertex_ids()[image[v]];

    std::vector<std::map<std::string, std::string>> emaps = {{}};
    for (auto& [src, dst] : blocks) {
      std::vector<int> perm = dst;
      std::sort(perm.begin(), perm.end());
      std::vector<std::map<std::string, std::string>> next;
      do {
        for (auto base : emaps) {
          for (std::size_t i = 0; i < src.size(); ++i)
            base[g.edge_ids()[src[i]]] = g.edge_ids()[perm[i]];
          next.push_back(std::move(base));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      emaps = std::move(next);
    }

    std::vector<std::string> loop_ids;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (g.is_loop((int)e)) loop_ids.push_back(g.edge_ids()[e]);

    for (auto& emap : emaps) {
      // Each loop image may be traversed either way.
      std::size_t combos = std::size_t(1) << loop_ids.size();
      for (std::size_t mask = 0; mask < combos; ++mask) {
        Automorphism a;
        a.vertex_map = vmap;
        a.edge_map = emap;
        for (std::size_t i = 0; i < loop_ids.size(); ++i)
          if (mask >> i & 1) a.twists.insert(loop_ids[i]);
        group.elements.push_back(std::move(a));
      }
    }
  };

  std::function<void(std::size_t)> place = [&](std::size_t v) {
    if (v == n) {
      expand_edges();
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || inv[w] != inv[v]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        ok = multiplicity((int)u, (int)v) == multiplicity(image[u], (int)w);
      if (multiplicity((int)v, (int)v) != multiplicity((int)w, (int)w)) ok = false;
      if (!ok) continue;
      used[w] = true;
      image[v] = (int)w;
      place(v + 1);
      used[w] = false;
      image[v] = -1;
    }
  };
  place(0);

  std::sort(group.elements.begin(), group.elements.end());
  group.order = (long)group.elements.size();
  return group;
}

}  // namespace minorhom
