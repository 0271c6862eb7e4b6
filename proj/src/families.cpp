#include "minorhom/families.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "minorhom/complex.hpp"
#include "minorhom/error.hpp"
#include "minorhom/homology.hpp"
#include "minorhom/linalg.hpp"

namespace minorhom {

namespace {

std::string signature_string(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream out;
  out << "n=" << n << " m=" << edges.size() << ":";
  for (const auto& [a, b] : edges) out << "(" << a << "," << b << ")";
  return out.str();
}

// Isomorphism-invariant vertex colors: start from (loop count, degree) and
// refine by sorted neighbor-color multisets until stable.
std::vector<int> refined_colors(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> color(n, 0);
  std::size_t classes = 1;
  for (int round = 0; round <= n; ++round) {
    std::map<std::vector<long long>, std::vector<int>> buckets;
    for (int v = 0; v < n; ++v) {
      std::vector<long long> key{color[v], g.loops_at(v), g.degree(v)};
      std::vector<long long> nbr;
      for (int e : g.edges_at(v)) {
        if (g.is_loop(e)) continue;
        auto [a, b] = g.ends(e);
        nbr.push_back(color[a == v ? b : a]);
      }
      std::sort(nbr.begin(), nbr.end());
      key.insert(key.end(), nbr.begin(), nbr.end());
      buckets[std::move(key)].push_back(v);
    }
    int next = 0;
    for (const auto& [key, members] : buckets) {
      for (int v : members) color[v] = next;
      ++next;
    }
    if (static_cast<std::size_t>(next) == classes) break;
    classes = next;
  }
  return color;
}

bool advance_class_permutations(std::vector<std::vector<int>>& cls) {
  for (auto it = cls.rbegin(); it != cls.rend(); ++it)
    if (std::next_permutation(it->begin(), it->end())) return true;
  return false;
}

Graph point_graph() { return Graph::make({"v1"}, {}); }

Graph representative_from(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i + 1));
  std::vector<EdgeSpec> es;
  for (std::size_t k = 0; k < edges.size(); ++k)
    es.push_back({"e" + std::to_string(k + 1), vs[edges[k].first], vs[edges[k].second]});
  return Graph::make(vs, es);
}

// Worker pool over [0, count): each index is claimed once, results land in
// caller-owned slots, so the merge order never depends on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs < 1) fail(ErrorKind::BadConfig, "worker count must be >= 1");
  const std::size_t width = std::min<std::size_t>(jobs, count);
  if (width <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr first_error;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < width; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<std::pair<int, int>> canonical_edges(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  if (n > 10) fail(ErrorKind::TooLarge, "canonical form limited to 10 vertices");
  std::vector<int> color = refined_colors(g);

  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
  std::vector<std::vector<int>> cls;
  std::vector<int> offset;
  int slot = 0;
  double candidates = 1;
  for (auto& [c, members] : by_color) {
    offset.push_back(slot);
    slot += static_cast<int>(members.size());
    for (std::size_t j = 2; j <= members.size(); ++j) candidates *= static_cast<double>(j);
    cls.push_back(std::move(members));
  }
  if (candidates > 2e6) fail(ErrorKind::TooLarge, "too many candidate labelings");

  std::vector<std::pair<int, int>> raw;
  for (std::size_t e = 0; e < g.edge_count(); ++e) raw.push_back(g.ends(static_cast<int>(e)));

  std::vector<int> perm(n, 0);
  std::optional<std::vector<std::pair<int, int>>> best;
  do {
    for (std::size_t c = 0; c < cls.size(); ++c)
      for (std::size_t j = 0; j < cls[c].size(); ++j) perm[cls[c][j]] = offset[c] + static_cast<int>(j);
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(raw.size());
    for (const auto& [a, b] : raw)
      mapped.push_back({std::min(perm[a], perm[b]), std::max(perm[a], perm[b])});
    std::sort(mapped.begin(), mapped.end());
    if (!best || mapped < *best) best = std::move(mapped);
  } while (advance_class_permutations(cls));
  return *best;
}

std::string graph_signature(const Graph& g) {
  return signature_string(g.vertex_count(), canonical_edges(g));
}

std::vector<Graph> enumerate_graphs(std::size_t max_edges, bool simple_only) {
  if (max_edges > 8) fail(ErrorKind::TooLarge, "enumeration limited to 8 edges");
  std::vector<std::vector<Graph>> levels(max_edges + 1);
  levels[0].push_back(point_graph());
  for (std::size_t m = 1; m <= max_edges; ++m) {
    std::map<std::string, Graph> found;
    for (const Graph& g : levels[m - 1]) {
      const auto& vids = g.vertex_ids();
      std::vector<EdgeSpec> base;
      for (const auto& id : g.edge_ids()) {
        auto [u, w] = g.edge_ends(id);
        base.push_back({id, u, w});
      }
      auto consider = [&](const std::vector<std::string>& vs, const EdgeSpec& extra) {
        std::vector<EdgeSpec> es = base;
        es.push_back(extra);
        Graph cand = Graph::make(vs, es);
        auto ce = canonical_edges(cand);
        std::string sig = signature_string(cand.vertex_count(), ce);
        if (!found.count(sig)) found.emplace(sig, representative_from(cand.vertex_count(), ce));
      };
      for (std::size_t ui = 0; ui < vids.size(); ++ui) {
        for (std::size_t wi = ui; wi < vids.size(); ++wi) {
          if (simple_only) {
            if (ui == wi) continue;
            bool present = false;
            for (std::size_t e = 0; e < g.edge_count() && !present; ++e)
              present = g.ends(static_cast<int>(e)) ==
                        std::make_pair(static_cast<int>(ui), static_cast<int>(wi));
            if (present) continue;
          }
          consider(vids, {"zz_new", vids[ui], vids[wi]});
        }
        std::vector<std::string> vs = vids;
        vs.push_back("zz_w");
        consider(vs, {"zz_new", vids[ui], "zz_w"});
      }
    }
    for (auto& [sig, rep] : found) levels[m].push_back(rep);
  }
  std::vector<Graph> out;
  for (std::size_t m = 1; m <= max_edges; ++m)
    out.insert(out.end(), levels[m].begin(), levels[m].end());
  return out;
}

ModuleEvaluator constant_module() {
  ModuleEvaluator m;
  m.name = "constant";
  m.dimension = [](const Graph&) { return 1L; };
  m.induced = [](const MinorMorphism&) { return std::vector<std::vector<Rat>>{{Rat(1)}}; };
  return m;
}

ModuleEvaluator edge_module() {
  ModuleEvaluator m;
  m.name = "edge";
  m.dimension = [](const Graph& g) { return static_cast<long>(g.edge_count()); };
  m.induced = [](const MinorMorphism& phi) {
    const Graph& s = phi.source();
    const Graph& t = phi.target();
    std::vector<std::vector<Rat>> mat(s.edge_count(), std::vector<Rat>(t.edge_count(), Rat(0)));
    for (const auto& [te, se] : edge_injection(phi)) mat[s.edge_index(se)][t.edge_index(te)] = 1;
    return mat;
  };
  return m;
}

namespace {

ModuleEvaluator homology_module(const std::string& name, const ComplexBuilder& builder, int i) {
  if (i < 0) fail(ErrorKind::BadDegree, "homology degree must be >= 0");
  ModuleEvaluator m;
  m.name = name;
  m.dimension = [builder, i](const Graph& g) {
    return homology(builder.build(g), i, Coefficients::rationals(), false).free_rank;
  };
  m.induced = [builder, i](const MinorMorphism& phi) {
    return induced_map_on_homology(phi, builder, i, Coefficients::rationals(), false).matrix;
  };
  return m;
}

}  // namespace

ModuleEvaluator matching_homology_module(int i) {
  return homology_module("matching-h" + std::to_string(i), matching_builder(), i);
}

ModuleEvaluator d_matching_homology_module(int d, int i) {
  return homology_module("dmatching" + std::to_string(d) + "-h" + std::to_string(i),
                         d_matching_builder(d), i);
}

ModuleEvaluator spanning_tree_module() {
  ModuleEvaluator m;
  m.name = "spanning-trees";
  m.dimension = [](const Graph& g) { return spanning_tree_count(g).convert_to<long>(); };
  return m;
}

ModuleEvaluator module_by_name(const std::string& name) {
  if (name == "constant") return constant_module();
  if (name == "edge") return edge_module();
  if (name == "spanning-trees") return spanning_tree_module();
  auto parse_tail = [&](const std::string& prefix) -> std::optional<long> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string tail = name.substr(prefix.size());
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return std::stol(tail);
  };
  if (auto i = parse_tail("matching-h")) return matching_homology_module(static_cast<int>(*i));
  if (name.rfind("dmatching", 0) == 0) {
    auto split = name.find("-h");
    if (split != std::string::npos) {
      const std::string ds = name.substr(9, split - 9);
      const std::string is = name.substr(split + 2);
      if (!ds.empty() && !is.empty() &&
          ds.find_first_not_of("0123456789") == std::string::npos &&
          is.find_first_not_of("0123456789") == std::string::npos)
        return d_matching_homology_module(std::stoi(ds), std::stoi(is));
    }
  }
  fail(ErrorKind::BadConfig, "unknown module: " + name);
}

ScanReport generation_scan(const ModuleEvaluator& m, int n_edges, std::size_t max_edges,
                           int jobs) {
  if (n_edges < 0) fail(ErrorKind::BadConfig, "minor edge budget must be >= 0");
  if (!m.dimension || !m.induced)
    fail(ErrorKind::BadConfig, "generation scan needs a module with induced maps");
  std::vector<Graph> all = enumerate_graphs(max_edges);
  std::vector<Graph> targets{point_graph()};
  std::vector<const Graph*> sources;
  for (const Graph& g : all) {
    if (static_cast<int>(g.edge_count()) <= n_edges)
      targets.push_back(g);
    else
      sources.push_back(&g);
  }

  struct Row {
    long dim = 0;
    long spanned = 0;
  };
  std::vector<Row> results(sources.size());
  parallel_for(sources.size(), jobs, [&](std::size_t idx) {
    const Graph& g = *sources[idx];
    Row& out = results[idx];
    out.dim = m.dimension(g);
    if (out.dim == 0) return;
    FieldMatrix<RationalField> image_rows;
    for (const Graph& t : targets) {
      for (const MinorMorphism& phi : enumerate_minor_morphisms(g, t, max_edges)) {
        auto mat = m.induced(phi);
        const std::size_t cols = mat.empty() ? 0 : mat[0].size();
        for (std::size_t j = 0; j < cols; ++j) {
          std::vector<Rat> row(out.dim, Rat(0));
          for (long r = 0; r < out.dim; ++r) row[r] = mat[r][j];
          image_rows.push_back(std::move(row));
        }
      }
    }
    if (!image_rows.empty())
      out.spanned = static_cast<long>(field_rank(RationalField{}, image_rows));
  });

  ScanReport rep;
  rep.family = "generation module=" + m.name + " N=" + std::to_string(n_edges) +
               " max_edges=" + std::to_string(max_edges);
  rep.columns = {"graph", "dim", "spanned", "deficit"};
  long max_deficit = 0;
  long with_deficit = 0;
  for (std::size_t idx = 0; idx < sources.size(); ++idx) {
    const long deficit = results[idx].dim - results[idx].spanned;
    if (deficit > 0) ++with_deficit;
    max_deficit = std::max(max_deficit, deficit);
    rep.rows.push_back({graph_signature(*sources[idx]), std::to_string(results[idx].dim),
                        std::to_string(results[idx].spanned), std::to_string(deficit)});
  }
  rep.extremes["max_deficit"] = std::to_string(max_deficit);
  rep.extremes["graphs_with_deficit"] = std::to_string(with_deficit);
  rep.all_passed = with_deficit == 0;
  return rep;
}

ScanReport dimension_bound_check(const Graph& target, std::size_t max_edges, int jobs) {
  const Int aut = automorphisms(target).order;
  const long te = static_cast<long>(target.edge_count());
  const long tg = target.genus();

  std::vector<Graph> all{point_graph()};
  for (Graph& g : enumerate_graphs(max_edges)) all.push_back(std::move(g));

  std::vector<Int> counts(all.size());
  parallel_for(all.size(), jobs, [&](std::size_t idx) {
    counts[idx] = static_cast<long>(enumerate_minor_morphisms(all[idx], target).size());
  });

  ScanReport rep;
  rep.family = "dimension-bound target=" + graph_signature(target) +
               " max_edges=" + std::to_string(max_edges);
  rep.columns = {"graph", "hom_count", "bound", "ok"};
  long violations = 0;
  Int max_count = 0;
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const Graph& g = all[idx];
    const long e = static_cast<long>(g.edge_count());
    const Int bound = aut * binomial(e, te) * binomial(e - te, g.genus() - tg);
    const bool ok = counts[idx] <= bound;
    if (!ok) ++violations;
    max_count = std::max(max_count, counts[idx]);
    rep.rows.push_back({graph_signature(g), counts[idx].str(), bound.str(), ok ? "yes" : "no"});
  }
  rep.extremes["violations"] = std::to_string(violations);
  rep.extremes["max_hom_count"] = max_count.str();
  rep.all_passed = violations == 0;
  return rep;
}

ScanReport torsion_scan(int i, int d, std::size_t bound, bool simple_only,
                        const std::string& only, int jobs) {
  if (i < 0) fail(ErrorKind::BadDegree, "homology degree must be >= 0");
  if (d < 1) fail(ErrorKind::BadConfig, "matching bound must be >= 1");
  if (bound > 8) fail(ErrorKind::TooLarge, "torsion scan limited to bound 8");
  if (!only.empty() && only != "complete")
    fail(ErrorKind::BadConfig, "unknown family restriction: " + only);

  std::vector<std::pair<std::string, Graph>> family;
  if (only == "complete") {
    if (bound < 2) fail(ErrorKind::BadConfig, "complete family needs bound >= 2");
    for (std::size_t n = 2; n <= bound; ++n)
      family.push_back({"K" + std::to_string(n), complete_graph(static_cast<long>(n))});
  } else {
    for (Graph& g : enumerate_graphs(bound, simple_only)) {
      std::string sig = graph_signature(g);
      family.push_back({std::move(sig), std::move(g)});
    }
  }

  ScanReport rep;
  rep.family = "torsion i=" + std::to_string(i) + " d=" + std::to_string(d) +
               (only == "complete" ? " complete<=K" + std::to_string(bound)
                                   : " max_edges=" + std::to_string(bound)) +
               (simple_only ? " simple" : "") + " (exponent observed on this family only)";
  rep.columns = {"graph", "free_rank", "torsion", "uct_ok"};

  struct Row {
    HomologyGroup h;
    bool uct = true;
  };
  std::vector<Row> results(family.size());
  parallel_for(family.size(), jobs, [&](std::size_t idx) {
    const Graph& g = family[idx].second;
    SimplicialComplex c = d == 1 ? matching_complex(g) : d_matching_complex(g, d);
    results[idx].h = homology(c, i, Coefficients::integers(), false);
    results[idx].uct = uct_consistency(c, i, 2, false) && uct_consistency(c, i, 3, false);
  });

  Int max_exponent = 1;
  long with_torsion = 0;
  long uct_failures = 0;
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    const HomologyGroup& h = results[idx].h;
    if (!results[idx].uct) ++uct_failures;
    if (!h.torsion.empty()) {
      ++with_torsion;
      max_exponent = std::max(max_exponent, h.exponent());
    }
    std::string tors;
    for (const Int& f : h.torsion) tors += (tors.empty() ? "" : ",") + f.str();
    if (tors.empty()) tors = "-";
    rep.rows.push_back({family[idx].first, std::to_string(h.free_rank), tors,
                        results[idx].uct ? "yes" : "no"});
  }
  rep.extremes["max_torsion_exponent"] = max_exponent.str();
  rep.extremes["graphs_with_torsion"] = std::to_string(with_torsion);
  rep.extremes["uct_failures"] = std::to_string(uct_failures);
  rep.all_passed = uct_failures == 0;
  return rep;
}

Graph sprout(const Graph& g, const std::map<std::string, long>& leaves_at) {
  std::vector<std::string> vs = g.vertex_ids();
  std::vector<EdgeSpec> es;
  for (const auto& id : g.edge_ids()) {
    auto [u, w] = g.edge_ends(id);
    es.push_back({id, u, w});
  }
  for (const auto& [v, count] : leaves_at) {
    if (!g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "no vertex " + v);
    if (count < 0) fail(ErrorKind::BadConfig, "leaf count must be >= 0");
    for (long j = 1; j <= count; ++j) {
      const std::string leaf = v + "~l" + std::to_string(j);
      vs.push_back(leaf);
      es.push_back({v + "~s" + std::to_string(j), v, leaf});
    }
  }
  return Graph::make(vs, es);
}

Graph subdivide(const Graph& g, const std::map<std::string, long>& cuts_at) {
  for (const auto& [e, count] : cuts_at) {
    if (!g.has_edge(e)) fail(ErrorKind::UnknownEdge, "no edge " + e);
    if (count < 0) fail(ErrorKind::BadConfig, "subdivision count must be >= 0");
  }
  std::vector<std::string> vs = g.vertex_ids();
  std::vector<EdgeSpec> es;
  for (const auto& id : g.edge_ids()) {
    auto [u, w] = g.edge_ends(id);
    auto it = cuts_at.find(id);
    const long cuts = it == cuts_at.end() ? 0 : it->second;
    if (cuts == 0) {
      es.push_back({id, u, w});
      continue;
    }
    std::string prev = u;
    for (long j = 1; j <= cuts; ++j) {
      const std::string mid = id + "~v" + std::to_string(j);
      vs.push_back(mid);
      es.push_back({id + "~s" + std::to_string(j - 1), prev, mid});
      prev = mid;
    }
    es.push_back({id + "~s" + std::to_string(cuts), prev, w});
  }
  return Graph::make(vs, es);
}

Graph growth_member(const GrowthFamily& family, long n) {
  if (n < 0) fail(ErrorKind::BadConfig, "family parameter must be >= 0");
  std::map<std::string, long> cuts;
  for (const auto& e : family.subdivide_edges) cuts[e] = n;
  std::map<std::string, long> leaves;
  for (const auto& v : family.sprout_vertices) leaves[v] = n;
  return sprout(subdivide(family.base, cuts), leaves);
}

namespace {

Rat eval_poly_rat(const std::vector<Rat>& coeffs, long x) {
  Rat acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * Rat(x) + *it;
  return acc;
}

}  // namespace

GrowthFit growth_fit(const ModuleEvaluator& m, const GrowthFamily& family, long window_lo,
                     long window_hi) {
  if (!m.dimension) fail(ErrorKind::BadConfig, "module has no dimension function");
  if (window_lo < 0 || window_hi < window_lo)
    fail(ErrorKind::BadConfig, "window must be a nonempty range of nonnegative parameters");
  const long width = window_hi - window_lo + 1;
  if (width < 2) fail(ErrorKind::NoFit, "window too small to witness a polynomial");

  GrowthFit fit;
  fit.window_lo = window_lo;
  fit.window_hi = window_hi;
  for (long n = window_lo; n <= window_hi; ++n)
    fit.window_values.push_back(m.dimension(growth_member(family, n)));

  // Newton divided differences at unit-spaced nodes, then monomial expansion.
  std::vector<Rat> dd(fit.window_values.begin(), fit.window_values.end());
  for (long k = 1; k < width; ++k)
    for (long j = width - 1; j >= k; --j) dd[j] = (dd[j] - dd[j - 1]) / Rat(k);
  std::vector<Rat> poly{dd[width - 1]};
  for (long j = width - 2; j >= 0; --j) {
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    for (std::size_t t = 0; t < poly.size(); ++t) {
      next[t + 1] += poly[t];
      next[t] -= poly[t] * Rat(window_lo + j);
    }
    next[0] += dd[j];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  fit.coefficients = poly;

  const long degree = poly.size() == 1 && poly[0] == 0 ? 0 : static_cast<long>(poly.size()) - 1;
  if (degree > width - 2)
    fail(ErrorKind::NoFit, "window too small: no redundant point confirms the interpolant");
  for (long n = window_hi + 1; n <= window_hi + 2; ++n) {
    const long actual = m.dimension(growth_member(family, n));
    if (eval_poly_rat(poly, n) != Rat(actual))
      fail(ErrorKind::NoFit, "window not yet in the polynomial range: prediction at n=" +
                                 std::to_string(n) + " misses");
    fit.predicted.push_back(actual);
  }
  return fit;
}

Graph dyck_tree(const std::string& word) {
  std::vector<std::string> vs{"v0"};
  std::vector<EdgeSpec> es;
  std::vector<int> stack{0};
  int created = 0;
  for (char ch : word) {
    if (ch == '(') {
      ++created;
      const std::string id = std::to_string(created);
      vs.push_back("v" + id);
      es.push_back({"e" + id, vs[stack.back()], "v" + id});
      stack.push_back(created);
    } else if (ch == ')') {
      if (stack.size() <= 1) fail(ErrorKind::Unbalanced, "unmatched right parenthesis");
      stack.pop_back();
    } else {
      fail(ErrorKind::Unbalanced, std::string("unexpected character '") + ch + "'");
    }
  }
  if (stack.size() != 1) fail(ErrorKind::Unbalanced, "unmatched left parenthesis");
  return Graph::make(vs, es);
}

std::vector<long long> hd_series(const ModuleEvaluator& m, int n_max) {
  if (!m.dimension) fail(ErrorKind::BadConfig, "module has no dimension function");
  if (n_max < 0) fail(ErrorKind::BadConfig, "series order must be >= 0");
  if (n_max > 8) fail(ErrorKind::TooLarge, "series truncation limited to t^8");

  std::vector<long long> out(n_max + 1, 0);
  std::map<std::string, long> dim_cache;
  std::string word;
  auto visit = [&](auto&& self, int open, int closed, int n) -> void {
    if (static_cast<int>(word.size()) == 2 * n) {
      Graph t = dyck_tree(word);
      std::string sig = graph_signature(t);
      auto it = dim_cache.find(sig);
      if (it == dim_cache.end()) it = dim_cache.emplace(sig, m.dimension(t)).first;
      out[n] += it->second;
      return;
    }
    if (open < n) {
      word.push_back('(');
      self(self, open + 1, closed, n);
      word.pop_back();
    }
    if (closed < open) {
      word.push_back(')');
      self(self, open, closed + 1, n);
      word.pop_back();
    }
  };
  for (int n = 0; n <= n_max; ++n) {
    word.clear();
    visit(visit, 0, 0, n);
  }
  return out;
}

}  // namespace minorhom
