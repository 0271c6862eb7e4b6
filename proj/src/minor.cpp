#include "minorhom/minor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace minorhom {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
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

MinorMorphism::MinorMorphism(Graph source, Graph target,
                             std::map<std::string, std::string> vertex_map,
                             std::map<std::string, EdgeImage> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  for (const auto& v : source_.vertex_ids())
    if (!vertex_map_.count(v))
      fail(ErrorKind::Mismatch, "vertex map is missing source vertex " + v);
  if (vertex_map_.size() != source_.vertex_count())
    fail(ErrorKind::Mismatch, "vertex map mentions ids outside the source vertex set");
  for (const auto& [v, w] : vertex_map_) target_.vertex_index(w);  // UnknownVertex

  for (const auto& e : source_.edge_ids())
    if (!edge_map_.count(e)) fail(ErrorKind::Mismatch, "edge map is missing source edge " + e);
  if (edge_map_.size() != source_.edge_count())
    fail(ErrorKind::Mismatch, "edge map mentions ids outside the source edge set");
  for (const auto& [e, img] : edge_map_) {
    switch (img.fate) {
      case EdgeFate::Kept:
        target_.edge_index(img.image);  // UnknownEdge
        break;
      case EdgeFate::Contracted:
        target_.vertex_index(img.image);  // UnknownVertex
        break;
      case EdgeFate::Deleted:
        if (!img.image.empty())
          fail(ErrorKind::Mismatch, "deleted edge " + e + " carries an image");
        break;
    }
  }
}

std::vector<AxiomViolation> MinorMorphism::validate() const {
  std::vector<AxiomViolation> out;

  // axiom 3: kept edges hit every target edge exactly once
  std::map<std::string, std::vector<std::string>> preimages;
  for (const auto& [e, img] : edge_map_)
    if (img.fate == EdgeFate::Kept) preimages[img.image].push_back(e);
  for (const auto& t : target_.edge_ids()) {
    auto it = preimages.find(t);
    if (it == preimages.end())
      out.push_back({3, "target edge " + t + " has no preimage arrow"});
    else if (it->second.size() > 1)
      out.push_back({3, "target edge " + t + " has " + std::to_string(it->second.size()) +
                            " preimage edges"});
  }

  auto vertex_image = [&](int idx) { return vertex_map_.at(source_.vertex_ids()[idx]); };

  for (const auto& [e, img] : edge_map_) {
    int ei = source_.edge_index(e);
    auto [u, v] = source_.ends(ei);
    if (img.fate == EdgeFate::Kept) {
      // axiom 4: head/tail of the image arrow match the images of head/tail
      Arrow a{ei, false};
      Arrow b{target_.edge_index(img.image), img.twist};
      std::string tail_img = vertex_image(source_.tail(a));
      std::string head_img = vertex_image(source_.head(a));
      std::string tgt_tail = target_.vertex_ids()[target_.tail(b)];
      std::string tgt_head = target_.vertex_ids()[target_.head(b)];
      if (tail_img != tgt_tail || head_img != tgt_head)
        out.push_back({4, "kept edge " + e + " maps ends (" + tail_img + "," + head_img +
                              ") onto edge " + img.image + " with ends (" + tgt_tail + "," +
                              tgt_head + ")"});
    } else if (img.fate == EdgeFate::Contracted) {
      // axiom 5: both endpoints land on the collapse vertex
      if (vertex_image(u) != img.image || vertex_image(v) != img.image)
        out.push_back({5, "collapsed edge " + e + " has endpoint images (" + vertex_image(u) +
                              "," + vertex_image(v) + ") but image vertex " + img.image});
    }
  }

  // axiom 6: fibers are trees
  for (const auto& tv : target_.vertex_ids()) {
    std::vector<int> fiber_vertices;
    for (std::size_t i = 0; i < source_.vertex_count(); ++i)
      if (vertex_map_.at(source_.vertex_ids()[i]) == tv) fiber_vertices.push_back((int)i);
    std::vector<int> fiber_edges;
    for (const auto& [e, img] : edge_map_)
      if (img.fate == EdgeFate::Contracted && img.image == tv)
        fiber_edges.push_back(source_.edge_index(e));
    if (fiber_vertices.empty()) {
      out.push_back({6, "vertex " + tv + " has an empty fiber"});
      continue;
    }
    std::map<int, int> local;
    for (std::size_t i = 0; i < fiber_vertices.size(); ++i) local[fiber_vertices[i]] = (int)i;
    Dsu dsu((int)fiber_vertices.size());
    bool acyclic = true;
    bool inside = true;
    for (int ei : fiber_edges) {
      auto [u, v] = source_.ends(ei);
      if (!local.count(u) || !local.count(v)) {
        inside = false;  // axiom 5 already reports the endpoint mismatch
        continue;
      }
      if (!dsu.unite(local[u], local[v])) acyclic = false;
    }
    int components = 0;
    for (std::size_t i = 0; i < fiber_vertices.size(); ++i)
      if (dsu.find((int)i) == (int)i) ++components;
    if (!acyclic)
      out.push_back({6, "fiber of " + tv + " contains a cycle"});
    else if (inside && components != 1)
      out.push_back({6, "fiber of " + tv + " has " + std::to_string(components) +
                            " components"});
  }

  std::sort(out.begin(), out.end(),
            [](const AxiomViolation& a, const AxiomViolation& b) {
              return a.axiom != b.axiom ? a.axiom < b.axiom : a.detail < b.detail;
            });
  return out;
}

Arrow MinorMorphism::arrow_image(const Arrow& a) const {
  const std::string& e = source_.edge_ids()[a.edge];
  const EdgeImage& img = edge_map_.at(e);
  if (img.fate != EdgeFate::Kept)
    fail(ErrorKind::Mismatch, "edge " + e + " is not kept, its arrows have no arrow image");
  return Arrow{target_.edge_index(img.image), a.rev != img.twist};
}

bool operator==(const MinorMorphism& a, const MinorMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.vertex_map_ == b.vertex_map_ &&
         a.edge_map_ == b.edge_map_;
}

bool operator<(const MinorMorphism& a, const MinorMorphism& b) {
  if (a.vertex_map_ != b.vertex_map_) return a.vertex_map_ < b.vertex_map_;
  return a.edge_map_ < b.edge_map_;
}

MinorMorphism identity_morphism(const Graph& g) {
  std::map<std::string, std::string> vmap;
  for (const auto& v : g.vertex_ids()) vmap[v] = v;
  std::map<std::string, EdgeImage> emap;
  for (const auto& e : g.edge_ids()) emap[e] = {EdgeFate::Kept, e, false};
  return MinorMorphism(g, g, std::move(vmap), std::move(emap));
}

std::pair<Graph, MinorMorphism> delete_edge(const Graph& g, const std::string& edge) {
  int ei = g.edge_index(edge);  // UnknownEdge
  Dsu dsu((int)g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if ((int)i == ei) continue;
    auto [u, v] = g.ends((int)i);
    dsu.unite(u, v);
  }
  int components = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (dsu.find((int)i) == (int)i) ++components;
  if (components != 1)
    fail(ErrorKind::WouldDisconnect, "deleting " + edge + " disconnects the graph");

  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if ((int)i == ei) continue;
    auto [u, v] = g.ends((int)i);
    specs.push_back({g.edge_ids()[i], g.vertex_ids()[u], g.vertex_ids()[v]});
  }
  Graph minor = Graph::make(g.vertex_ids(), specs);

  std::map<std::string, std::string> vmap;
  for (const auto& v : g.vertex_ids()) vmap[v] = v;
  std::map<std::string, EdgeImage> emap;
  for (const auto& e : g.edge_ids())
    emap[e] = (e == edge) ? EdgeImage{EdgeFate::Deleted, "", false}
                          : EdgeImage{EdgeFate::Kept, e, false};
  return {minor, MinorMorphism(g, minor, std::move(vmap), std::move(emap))};
}

std::pair<Graph, MinorMorphism> contract_edge(const Graph& g, const std::string& edge) {
  int ei = g.edge_index(edge);  // UnknownEdge
  if (g.is_loop(ei)) fail(ErrorKind::ContractLoop, "cannot collapse the loop " + edge);
  auto [ui, vi] = g.ends(ei);
  const std::string keep = g.vertex_ids()[ui];  // ids are sorted, so this is the smaller one
  const std::string gone = g.vertex_ids()[vi];

  std::vector<std::string> vertices;
  for (const auto& v : g.vertex_ids())
    if (v != gone) vertices.push_back(v);
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if ((int)i == ei) continue;
    auto [u, v] = g.ends((int)i);
    std::string a = g.vertex_ids()[u] == gone ? keep : g.vertex_ids()[u];
    std::string b = g.vertex_ids()[v] == gone ? keep : g.vertex_ids()[v];
    specs.push_back({g.edge_ids()[i], a, b});
  }
  Graph minor = Graph::make(vertices, specs);

  std::map<std::string, std::string> vmap;
  for (const auto& v : g.vertex_ids()) vmap[v] = (v == gone) ? keep : v;
  std::map<std::string, EdgeImage> emap;
  for (const auto& e : g.edge_ids())
    emap[e] = (e == edge) ? EdgeImage{EdgeFate::Contracted, keep, false}
                          : EdgeImage{EdgeFate::Kept, e, false};
  return {minor, MinorMorphism(g, minor, std::move(vmap), std::move(emap))};
}

MinorMorphism compose(const MinorMorphism& first, const MinorMorphism& second) {
  if (!(first.target() == second.source()))
    fail(ErrorKind::Mismatch, "middle graphs of the composition differ");
  std::map<std::string, std::string> vmap;
  for (const auto& [v, w] : first.vertex_map()) vmap[v] = second.vertex_map().at(w);
  std::map<std::string, EdgeImage> emap;
  for (const auto& [e, img] : first.edge_map()) {
    switch (img.fate) {
      case EdgeFate::Deleted:
        emap[e] = {EdgeFate::Deleted, "", false};
        break;
      case EdgeFate::Contracted:
        emap[e] = {EdgeFate::Contracted, second.vertex_map().at(img.image), false};
        break;
      case EdgeFate::Kept: {
        const EdgeImage& next = second.edge_map().at(img.image);
        if (next.fate == EdgeFate::Kept)
          emap[e] = {EdgeFate::Kept, next.image, img.twist != next.twist};
        else
          emap[e] = next;  // deleted stays deleted, contracted keeps the final vertex
        break;
      }
    }
  }
  return MinorMorphism(first.source(), second.target(), std::move(vmap), std::move(emap));
}

std::map<std::string, std::string> edge_injection(const MinorMorphism& phi) {
  std::map<std::string, std::string> inj;
  for (const auto& [e, img] : phi.edge_map())
    if (img.fate == EdgeFate::Kept) inj[img.image] = e;
  return inj;
}

std::vector<MinorMorphism> enumerate_minor_morphisms(const Graph& g, const Graph& target,
                                                     std::size_t max_edges) {
  if (g.edge_count() > max_edges)
    fail(ErrorKind::TooLarge,
         "morphism enumeration capped at " + std::to_string(max_edges) + " source edges");

  const int n = (int)g.vertex_count();
  const int m = (int)g.edge_count();
  const int nt = (int)target.vertex_count();
  const int mt = (int)target.edge_count();
  const int contracted = n - nt;

  std::vector<MinorMorphism> out;
  if (contracted < 0 || m - contracted < mt) return out;

  std::vector<int> nonloops;
  for (int i = 0; i < m; ++i)
    if (!g.is_loop(i)) nonloops.push_back(i);

  std::vector<int> forest;  // edge indices of the contracted part
  std::vector<char> in_forest(m, 0);

  auto emit_for_forest = [&]() {
    // components of (V, forest) become the target vertices
    Dsu dsu(n);
    for (int ei : forest) {
      auto [u, v] = g.ends(ei);
      dsu.unite(u, v);
    }
    std::vector<int> root_of(n), roots;
    for (int i = 0; i < n; ++i) {
      root_of[i] = dsu.find(i);
      if (root_of[i] == i) roots.push_back(i);
    }
    if ((int)roots.size() != nt) return;  // always n - contracted, kept as a guard
    std::map<int, int> comp;  // root -> component index
    for (std::size_t i = 0; i < roots.size(); ++i) comp[roots[i]] = (int)i;

    std::vector<int> assign(nt);  // component index -> target vertex index
    std::iota(assign.begin(), assign.end(), 0);
    do {
      // group the non-forest edges by the target vertex pair they land on
      std::vector<std::pair<int, int>> edge_pair(m, {-1, -1});
      for (int i = 0; i < m; ++i) {
        if (in_forest[i]) continue;
        auto [u, v] = g.ends(i);
        int a = assign[comp[root_of[u]]];
        int b = assign[comp[root_of[v]]];
        edge_pair[i] = std::minmax(a, b);
      }
      std::vector<std::vector<int>> candidates(mt);
      bool feasible = true;
      for (int j = 0; j < mt && feasible; ++j) {
        auto ends = target.ends(j);
        for (int i = 0; i < m; ++i)
          if (!in_forest[i] && edge_pair[i] == ends) candidates[j].push_back(i);
        if (candidates[j].empty()) feasible = false;
      }
      if (!feasible) continue;

      std::vector<int> kept(mt, -1);
      std::vector<char> used(m, 0);
      std::function<void(int)> pick = [&](int j) {
        if (j == mt) {
          // twists are forced on non-loop images, free on loops
          std::vector<int> loop_slots;
          for (int jj = 0; jj < mt; ++jj)
            if (target.is_loop(jj)) loop_slots.push_back(jj);
          for (unsigned long mask = 0; mask < (1ul << loop_slots.size()); ++mask) {
            std::map<std::string, std::string> vmap;
            for (int i = 0; i < n; ++i)
              vmap[g.vertex_ids()[i]] = target.vertex_ids()[assign[comp[root_of[i]]]];
            std::map<std::string, EdgeImage> emap;
            for (int ei : forest) {
              auto [u, v] = g.ends(ei);
              emap[g.edge_ids()[ei]] = {EdgeFate::Contracted,
                                        target.vertex_ids()[assign[comp[root_of[u]]]], false};
              (void)v;
            }
            std::vector<char> is_kept(m, 0);
            for (int jj = 0; jj < mt; ++jj) {
              int ei = kept[jj];
              is_kept[ei] = 1;
              bool twist;
              if (target.is_loop(jj)) {
                std::size_t slot =
                    std::lower_bound(loop_slots.begin(), loop_slots.end(), jj) -
                    loop_slots.begin();
                twist = (mask >> slot) & 1;
              } else {
                int tail_img = assign[comp[root_of[g.ends(ei).first]]];
                twist = tail_img != target.ends(jj).first;
              }
              emap[g.edge_ids()[ei]] = {EdgeFate::Kept, target.edge_ids()[jj], twist};
            }
            for (int i = 0; i < m; ++i)
              if (!in_forest[i] && !is_kept[i])
                emap[g.edge_ids()[i]] = {EdgeFate::Deleted, "", false};
            out.emplace_back(g, target, std::move(vmap), std::move(emap));
          }
          return;
        }
        for (int ei : candidates[j]) {
          if (used[ei]) continue;
          used[ei] = 1;
          kept[j] = ei;
          pick(j + 1);
          used[ei] = 0;
        }
      };
      pick(0);
    } while (std::next_permutation(assign.begin(), assign.end()));
  };

  // enumerate acyclic subsets of the non-loop edges with exactly `contracted` edges
  std::function<void(std::size_t, int, Dsu&)> grow = [&](std::size_t next, int need, Dsu& dsu) {
    if (need == 0) {
      emit_for_forest();
      return;
    }
    if (nonloops.size() - next < (std::size_t)need) return;
    for (std::size_t i = next; i < nonloops.size(); ++i) {
      int ei = nonloops[i];
      auto [u, v] = g.ends(ei);
      Dsu saved = dsu;
      if (!dsu.unite(u, v)) {
        dsu = saved;
        continue;
      }
      forest.push_back(ei);
      in_forest[ei] = 1;
      grow(i + 1, need - 1, dsu);
      forest.pop_back();
      in_forest[ei] = 0;
      dsu = saved;
    }
  };
  Dsu dsu(n);
  grow(0, contracted, dsu);

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace minorhom
