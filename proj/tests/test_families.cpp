#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "minorhom/error.hpp"
#include "minorhom/families.hpp"
#include "minorhom/graph.hpp"
#include "minorhom/homology.hpp"
#include "minorhom/minor.hpp"

using namespace minorhom;

namespace {

Graph bare_edge() { return Graph::make({"u", "w"}, {{"c", "u", "w"}}); }

const std::vector<std::string>* find_row(const ScanReport& rep, const std::string& graph) {
  for (const auto& row : rep.rows)
    if (row[0] == graph) return &row;
  return nullptr;
}

// Second canonicalization, written independently of the library's: minimize
// the printed edge multiset over all vertex permutations, no pruning.
std::string reference_key(std::size_t n, std::vector<std::pair<int, int>> edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::pair<int, int>> mapped;
    for (auto [a, b] : edges)
      mapped.push_back({std::min(perm[a], perm[b]), std::max(perm[a], perm[b])});
    std::sort(mapped.begin(), mapped.end());
    std::string key = std::to_string(n) + "|";
    for (auto [a, b] : mapped) key += std::to_string(a) + "." + std::to_string(b) + ";";
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string reference_key(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) edges.push_back(g.ends(static_cast<int>(e)));
  return reference_key(g.vertex_count(), edges);
}

// Second generator, also independent: all edge multisets over a fixed labeled
// vertex set, filtered to connected ones covering every vertex.
std::set<std::string> reference_classes(int m, bool simple_only) {
  std::set<std::string> out;
  for (int n = 1; n <= m + 1; ++n) {
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        if (a != b || !simple_only) cells.push_back({a, b});
    std::vector<std::pair<int, int>> chosen;
    auto connected_covering = [&]() {
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::vector<bool> touched(n, false);
      for (auto [a, b] : chosen) {
        touched[a] = touched[b] = true;
        parent[root(a)] = root(b);
      }
      if (n > 1)
        for (int v = 0; v < n; ++v)
          if (!touched[v]) return false;
      for (int v = 0; v < n; ++v)
        if (root(v) != root(0)) return false;
      return true;
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(chosen.size()) == m) {
        if (connected_covering()) out.insert(reference_key(n, chosen));
        return;
      }
      for (std::size_t c = from; c < cells.size(); ++c) {
        if (simple_only && !chosen.empty() && chosen.back() == cells[c]) continue;
        chosen.push_back(cells[c]);
        self(self, simple_only ? c + 1 : c);
        chosen.pop_back();
      }
    };
    if (m == 0) {
      if (n == 1) out.insert(reference_key(1, {}));
      continue;
    }
    rec(rec, 0);
  }
  return out;
}

}  // namespace

TEST_CASE("graph signatures are relabeling-invariant and separate classes") {
  Graph p3 = path_graph(3);
  std::map<std::string, std::string> vmap{
      {"v1", "x"}, {"v2", "b"}, {"v3", "q"}, {"v4", "m"}};
  std::map<std::string, std::string> emap{{"e1", "left"}, {"e2", "mid"}, {"e3", "right"}};
  CHECK(graph_signature(p3) == graph_signature(p3.relabeled(vmap, emap)));

  Graph c4 = cycle_graph(4);
  std::map<std::string, std::string> cv{{"v1", "d"}, {"v2", "a"}, {"v3", "c"}, {"v4", "b"}};
  std::map<std::string, std::string> ce{{"e1", "p"}, {"e2", "q"}, {"e3", "r"}, {"e4", "s"}};
  CHECK(graph_signature(c4) == graph_signature(c4.relabeled(cv, ce)));

  CHECK(graph_signature(p3) != graph_signature(star_graph(3)));
  CHECK(graph_signature(cycle_graph(1)) != graph_signature(path_graph(1)));
  CHECK(graph_signature(cycle_graph(2)) != graph_signature(cycle_graph(1)));
  CHECK(graph_signature(path_graph(1)) == "n=2 m=1:(0,1)");

  // relabeling also leaves matching homology alone, so scan rows cannot
  // depend on vertex names
  Graph c5 = cycle_graph(5);
  std::map<std::string, std::string> rv{
      {"v1", "z9"}, {"v2", "z1"}, {"v3", "k"}, {"v4", "a0"}, {"v5", "mm"}};
  std::map<std::string, std::string> re{
      {"e1", "t"}, {"e2", "u"}, {"e3", "vv"}, {"e4", "w"}, {"e5", "x"}};
  Graph c5r = c5.relabeled(rv, re);
  CHECK(homology(matching_complex(c5), 1, Coefficients::integers(), false) ==
        homology(matching_complex(c5r), 1, Coefficients::integers(), false));
}

TEST_CASE("enumerate_graphs matches the connected graph census") {
  // cumulative counts of connected simple graphs by edge count: per-count
  // census 1, 1, 3, 5, 12, 30, 79, 227
  const std::vector<std::size_t> simple_cumulative{1, 2, 5, 10, 22, 52, 131, 358};
  for (std::size_t m = 1; m <= 8; ++m)
    CHECK(enumerate_graphs(m, true).size() == simple_cumulative[m - 1]);

  auto one = enumerate_graphs(1);
  REQUIRE(one.size() == 2);
  CHECK(graph_signature(one[0]) == "n=1 m=1:(0,0)");  // loop
  CHECK(graph_signature(one[1]) == "n=2 m=1:(0,1)");  // edge
  CHECK(enumerate_graphs(2, true).size() == 2);       // edge, then the 2-path

  auto multi2 = enumerate_graphs(2);
  CHECK(multi2.size() == 6);

  SUBCASE("representatives are connected, deduplicated, deterministically ordered") {
    auto all = enumerate_graphs(5);
    std::set<std::string> seen;
    std::size_t last_m = 0;
    for (const Graph& g : all) {
      CHECK(g.edge_count() >= 1);
      CHECK(g.edge_count() <= 5);
      CHECK(g.edge_count() >= last_m);
      last_m = g.edge_count();
      CHECK(seen.insert(graph_signature(g)).second);
    }
    CHECK(all.size() == 142);
    auto again = enumerate_graphs(5);
    REQUIRE(again.size() == all.size());
    for (std::size_t k = 0; k < all.size(); ++k) CHECK(again[k] == all[k]);
  }

  CHECK_THROWS_AS(enumerate_graphs(9), Error);
}

TEST_CASE("enumeration agrees with an independent generator and canonical form") {
  for (bool simple : {false, true}) {
    std::map<int, std::set<std::string>> ours;
    for (const Graph& g : enumerate_graphs(5, simple))
      ours[static_cast<int>(g.edge_count())].insert(reference_key(g));
    for (int m = 1; m <= 5; ++m) {
      std::set<std::string> theirs = reference_classes(m, simple);
      CAPTURE(simple);
      CAPTURE(m);
      REQUIRE(ours[m].size() == theirs.size());
      CHECK(ours[m] == theirs);
    }
  }
}

TEST_CASE("module evaluators: dimensions, identities, composition") {
  Graph c4 = cycle_graph(4);
  auto mh0 = matching_homology_module(0);
  CHECK(mh0.name == "matching-h0");
  CHECK(mh0.dimension(c4) == 2);  // matchings of a 4-cycle form two disjoint segments

  auto id_map = mh0.induced(identity_morphism(c4));
  REQUIRE(id_map.size() == 2);
  CHECK(id_map[0] == std::vector<Rat>{Rat(1), Rat(0)});
  CHECK(id_map[1] == std::vector<Rat>{Rat(0), Rat(1)});

  auto me = edge_module();
  CHECK(me.dimension(c4) == 4);
  auto eid = me.induced(identity_morphism(c4));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(eid[r][c] == (r == c ? 1 : 0));

  SUBCASE("induced maps compose contravariantly") {
    Graph c3 = cycle_graph(3);
    auto [del, phi] = delete_edge(c3, "e1");
    auto [con, psi] = contract_edge(del, "e2");
    MinorMorphism both = compose(phi, psi);
    auto a = me.induced(phi);    // E(del) -> E(c3)
    auto b = me.induced(psi);    // E(con) -> E(del)
    auto ab = me.induced(both);  // E(con) -> E(c3)
    REQUIRE(ab.size() == 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < ab[0].size(); ++c) {
        Rat acc(0);
        for (std::size_t k = 0; k < b.size(); ++k) acc += a[r][k] * b[k][c];
        CHECK(ab[r][c] == acc);
      }
  }

  CHECK(constant_module().dimension(complete_graph(5)) == 1);
  CHECK(spanning_tree_module().dimension(complete_graph(4)) == 16);
  CHECK(matching_homology_module(1).dimension(two_star_tree(3, 3)) == 4);
  CHECK(d_matching_homology_module(2, 0).dimension(cycle_graph(4)) == 1);

  CHECK(module_by_name("matching-h1").name == "matching-h1");
  CHECK(module_by_name("dmatching2-h0").name == "dmatching2-h0");
  CHECK(module_by_name("edge").dimension(c4) == 4);
  CHECK(module_by_name("spanning-trees").dimension(c4) == 4);
  CHECK_THROWS_AS(module_by_name("matching"), Error);
  CHECK_THROWS_AS(module_by_name("matching-hx"), Error);
  CHECK_THROWS_AS(matching_homology_module(-1), Error);
}

TEST_CASE("generation scans: spans from small minors") {
  SUBCASE("every edge class comes from a one-edge minor") {
    ScanReport rep = generation_scan(edge_module(), 1, 4);
    CHECK(rep.all_passed);
    CHECK(rep.extremes.at("max_deficit") == "0");
    for (const auto& row : rep.rows) CHECK(row[3] == "0");
    CHECK(rep.rows.size() == 45);  // 47 multigraph classes minus the two 1-edge ones
  }

  SUBCASE("a zero-edge minor hits no edge class") {
    ScanReport rep = generation_scan(edge_module(), 0, 3);
    CHECK_FALSE(rep.all_passed);
    for (const auto& row : rep.rows) {
      CHECK(row[2] == "0");     // nothing spanned
      CHECK(row[1] == row[3]);  // deficit equals the full dimension
    }
    CHECK(rep.extremes.at("max_deficit") == "3");
    CHECK(rep.extremes.at("graphs_with_deficit") == std::to_string(rep.rows.size()));
  }

  SUBCASE("the point minor generates the constant module") {
    ScanReport rep = generation_scan(constant_module(), 0, 2);
    CHECK(rep.all_passed);
    for (const auto& row : rep.rows) CHECK(row[3] == "0");
  }

  SUBCASE("matching H_0 is generated by minors with at most two edges") {
    ScanReport rep = generation_scan(matching_homology_module(0), 2, 5);
    CHECK(rep.all_passed);
    CHECK(rep.extremes.at("max_deficit") == "0");
    CHECK(rep.rows.size() == 142 - 6);

    // same report again, this time spread over a worker pool
    ScanReport again = generation_scan(matching_homology_module(0), 2, 5, 4);
    CHECK(again.rows == rep.rows);
    CHECK(again.extremes == rep.extremes);
  }

  CHECK_THROWS_AS(generation_scan(edge_module(), -1, 3), Error);
  CHECK_THROWS_AS(generation_scan(spanning_tree_module(), 1, 3), Error);  // no induced maps
  CHECK_THROWS_AS(generation_scan(edge_module(), 1, 9), Error);
}

TEST_CASE("dimension bound check") {
  Graph point = Graph::make({"p"}, {});

  SUBCASE("morphisms to the point count spanning trees and respect the bound") {
    ScanReport rep = dimension_bound_check(point, 6);
    CHECK(rep.all_passed);
    CHECK(rep.extremes.at("violations") == "0");
    const auto* k4 = find_row(rep, graph_signature(complete_graph(4)));
    REQUIRE(k4 != nullptr);
    CHECK((*k4)[1] == "16");  // Cayley count 4^2
    CHECK((*k4)[2] == "20");  // 1 * C(6,0) * C(6,3)
    const auto* c4 = find_row(rep, graph_signature(cycle_graph(4)));
    REQUIRE(c4 != nullptr);
    CHECK((*c4)[1] == "4");
    const auto* p3 = find_row(rep, graph_signature(path_graph(3)));
    REQUIRE(p3 != nullptr);
    CHECK((*p3)[1] == "1");
    CHECK(rep.extremes.at("max_hom_count") == "16");
  }

  SUBCASE("single-edge target over all graphs with four edges or fewer") {
    ScanReport rep = dimension_bound_check(path_graph(1), 4);
    CHECK(rep.all_passed);
    CHECK(rep.rows.size() == 48);  // 47 classes plus the point row
  }

  SUBCASE("self-target counts automorphisms exactly") {
    Graph k3 = complete_graph(3);
    ScanReport rep = dimension_bound_check(k3, 3);
    const auto* self = find_row(rep, graph_signature(k3));
    REQUIRE(self != nullptr);
    CHECK((*self)[1] == "6");
    CHECK((*self)[2] == "6");  // |Aut| * C(3,3) * C(0,0): the bound is tight here
    CHECK(rep.all_passed);
  }
}

TEST_CASE("torsion scans") {
  SUBCASE("simple graphs with few edges have torsion-free matching H_1") {
    ScanReport rep = torsion_scan(1, 1, 6, true);
    CHECK(rep.all_passed);
    CHECK(rep.rows.size() == 52);
    for (const auto& row : rep.rows) {
      CHECK(row[2] == "-");
      CHECK(row[3] == "yes");
    }
    CHECK(rep.extremes.at("max_torsion_exponent") == "1");
    CHECK(rep.extremes.at("graphs_with_torsion") == "0");

    ScanReport parallel = torsion_scan(1, 1, 6, true, "", 4);
    CHECK(parallel.rows == rep.rows);
    CHECK(parallel.extremes == rep.extremes);
    CHECK_THROWS_AS(torsion_scan(1, 1, 6, true, "", 0), Error);
  }

  SUBCASE("complete family shows 3-torsion at K_7") {
    ScanReport rep = torsion_scan(1, 1, 7, false, "complete");
    REQUIRE(rep.rows.size() == 6);
    const auto* k7 = find_row(rep, "K7");
    REQUIRE(k7 != nullptr);
    CHECK((*k7)[1] == "0");
    CHECK((*k7)[2] == "3");
    CHECK((*k7)[3] == "yes");
    const auto* k5 = find_row(rep, "K5");
    REQUIRE(k5 != nullptr);
    CHECK((*k5)[1] == "6");  // matching complex of K_5: six independent circles
    CHECK(rep.extremes.at("max_torsion_exponent") == "3");
    CHECK(rep.extremes.at("graphs_with_torsion") == "1");
    CHECK(rep.all_passed);  // torsion is an observation; UCT failures are not
  }

  SUBCASE("degree-2 matchings scan cleanly") {
    ScanReport rep = torsion_scan(0, 2, 3);
    CHECK(rep.all_passed);
    CHECK(rep.rows.size() == 17);
  }

  CHECK_THROWS_AS(torsion_scan(-1, 1, 4), Error);
  CHECK_THROWS_AS(torsion_scan(1, 0, 4), Error);
  CHECK_THROWS_AS(torsion_scan(1, 1, 9), Error);
  CHECK_THROWS_AS(torsion_scan(1, 1, 4, false, "trees"), Error);
  CHECK_THROWS_AS(torsion_scan(1, 1, 1, false, "complete"), Error);
}

TEST_CASE("sprout and subdivide") {
  Graph base = bare_edge();

  SUBCASE("sprouting attaches the requested leaves") {
    Graph g = sprout(base, {{"u", 2}, {"w", 1}});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(g.vertex_index("u")) == 3);
    CHECK(g.degree(g.vertex_index("w")) == 2);
    CHECK(graph_signature(g) == graph_signature(two_star_tree(2, 1)));
    CHECK(graph_signature(sprout(base, {})) == graph_signature(base));
  }

  SUBCASE("subdividing a triangle edge gives longer cycles") {
    Graph k3 = complete_graph(3);
    CHECK(graph_signature(subdivide(k3, {{"e1_2", 1}})) == graph_signature(cycle_graph(4)));
    CHECK(graph_signature(subdivide(k3, {{"e1_2", 0}})) == graph_signature(k3));
    CHECK(graph_signature(subdivide(cycle_graph(1), {{"e1", 1}})) ==
          graph_signature(cycle_graph(2)));
  }

  SUBCASE("growth members apply one parameter everywhere") {
    GrowthFamily stars{base, {"u", "w"}, {}};
    CHECK(graph_signature(growth_member(stars, 3)) == graph_signature(two_star_tree(3, 3)));
    Graph k3 = complete_graph(3);
    GrowthFamily cyc{k3, {}, {"e1_2"}};
    CHECK(graph_signature(growth_member(cyc, 2)) == graph_signature(cycle_graph(5)));
    CHECK_THROWS_AS(growth_member(stars, -1), Error);
  }

  CHECK_THROWS_AS(sprout(base, {{"zz", 1}}), Error);
  CHECK_THROWS_AS(sprout(base, {{"u", -1}}), Error);
  CHECK_THROWS_AS(subdivide(base, {{"nope", 1}}), Error);
  CHECK_THROWS_AS(subdivide(base, {{"c", -2}}), Error);
}

TEST_CASE("growth fits") {
  GrowthFamily stars{bare_edge(), {"u", "w"}, {}};
  auto mh1 = matching_homology_module(1);

  SUBCASE("two-star matching H_1 grows as (n-1)^2") {
    GrowthFit fit = growth_fit(mh1, stars, 2, 5);
    CHECK(fit.coefficients == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});
    CHECK(fit.window_values == std::vector<long>{1, 4, 9, 16});
    CHECK(fit.predicted == std::vector<long>{25, 36});

    GrowthFit wide = growth_fit(mh1, stars, 1, 4);
    CHECK(wide.coefficients == fit.coefficients);
    CHECK(wide.predicted == std::vector<long>{16, 25});
  }

  SUBCASE("constant module fits the constant polynomial 1") {
    GrowthFit fit = growth_fit(constant_module(), stars, 0, 3);
    CHECK(fit.coefficients == std::vector<Rat>{Rat(1)});
  }

  SUBCASE("spanning trees of a subdivided triangle grow as m+3") {
    Graph k3 = complete_graph(3);
    GrowthFamily cyc{k3, {}, {"e1_2"}};
    GrowthFit fit = growth_fit(spanning_tree_module(), cyc, 0, 3);
    CHECK(fit.coefficients == std::vector<Rat>{Rat(3), Rat(1)});
    CHECK(fit.predicted == std::vector<long>{7, 8});
  }

  SUBCASE("windows without a confirming point are rejected") {
    CHECK_THROWS_WITH_AS(static_cast<void>(growth_fit(mh1, stars, 2, 3)),
                         doctest::Contains("window too small"), Error);
    CHECK_THROWS_AS(static_cast<void>(growth_fit(mh1, stars, 4, 4)), Error);
  }

  SUBCASE("pre-stable windows are rejected rather than extrapolated") {
    ModuleEvaluator late;
    late.name = "synthetic";
    late.dimension = [](const Graph& g) {
      return g.edge_count() < 6 ? 0L : static_cast<long>(g.edge_count());
    };
    // members have 1 + 2n edges: 1, 3, 5 in the window, then 7, 9 outside
    CHECK_THROWS_WITH_AS(static_cast<void>(growth_fit(late, stars, 0, 2)),
                         doctest::Contains("not yet in the polynomial range"), Error);
  }

  CHECK_THROWS_AS(static_cast<void>(growth_fit(mh1, stars, 3, 2)), Error);
  CHECK_THROWS_AS(static_cast<void>(growth_fit(mh1, stars, -1, 4)), Error);
  CHECK_THROWS_AS(static_cast<void>(growth_fit(spanning_tree_module(), GrowthFamily{bare_edge(), {}, {}}, 0, 0)),
                  Error);
}

TEST_CASE("dyck trees and homological-dimension series") {
  CHECK(graph_signature(dyck_tree("(()())")) == graph_signature(star_graph(3)));
  CHECK(graph_signature(dyck_tree("()()()")) == graph_signature(star_graph(3)));
  CHECK(dyck_tree("(()())").edge_count() == 3);
  CHECK(graph_signature(dyck_tree("(())")) == graph_signature(path_graph(2)));
  CHECK(graph_signature(dyck_tree("()")) == graph_signature(path_graph(1)));
  CHECK(dyck_tree("").vertex_count() == 1);
  CHECK(dyck_tree("").edge_count() == 0);

  CHECK_THROWS_AS(dyck_tree(")("), Error);
  CHECK_THROWS_AS(dyck_tree("(()"), Error);
  CHECK_THROWS_AS(dyck_tree("())"), Error);
  CHECK_THROWS_AS(dyck_tree("(a)"), Error);

  SUBCASE("constant module gives the Catalan numbers") {
    auto hd = hd_series(constant_module(), 8);
    CHECK(hd == std::vector<long long>{1, 1, 2, 5, 14, 42, 132, 429, 1430});
    // Catalan recurrence c_{n+1} = sum c_i c_{n-i}
    for (std::size_t n = 0; n + 1 < hd.size(); ++n) {
      long long acc = 0;
      for (std::size_t i = 0; i <= n; ++i) acc += hd[i] * hd[n - i];
      CHECK(acc == hd[n + 1]);
    }
  }

  SUBCASE("edge module weights each tree by its edge count") {
    auto hd = hd_series(edge_module(), 4);
    CHECK(hd == std::vector<long long>{0, 1, 4, 15, 56});  // n * catalan(n)
  }

  CHECK_THROWS_AS(hd_series(constant_module(), 9), Error);
  CHECK_THROWS_AS(hd_series(constant_module(), -1), Error);
}
