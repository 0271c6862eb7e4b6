#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "minorhom/minor.hpp"
#include "minorhom/numeric.hpp"

using namespace minorhom;

namespace {

Graph point() { return Graph::make({"p"}, {}); }
Graph loop() { return Graph::make({"v"}, {{"e", "v", "v"}}); }

bool has_axiom(const std::vector<AxiomViolation>& vs, int axiom) {
  return std::any_of(vs.begin(), vs.end(),
                     [axiom](const AxiomViolation& v) { return v.axiom == axiom; });
}

}  // namespace

TEST_SUITE_BEGIN("minor");

TEST_CASE("identity morphisms validate and act trivially") {
  for (const auto& g : {complete_graph(3), loop_bouquet(2), two_star_tree(1, 2)}) {
    auto id = identity_morphism(g);
    CHECK(id.is_valid());
    auto inj = edge_injection(id);
    for (const auto& e : g.edge_ids()) CHECK(inj.at(e) == e);
    CHECK(id.arrow_image(Arrow{0, true}) == Arrow{0, true});
  }
}

TEST_CASE("constructor rejects ill-formed data, validate reports axioms") {
  Graph c2 = cycle_graph(2);  // two vertices joined by parallel edges e1, e2
  Graph pt = point();

  CHECK_THROWS_AS(MinorMorphism(c2, pt, {{"v1", "p"}}, {}), Error);  // missing v2, e1, e2

  // collapsing both parallel edges puts a cycle in the fiber
  MinorMorphism both(c2, pt, {{"v1", "p"}, {"v2", "p"}},
                     {{"e1", {EdgeFate::Contracted, "p", false}},
                      {"e2", {EdgeFate::Contracted, "p", false}}});
  auto v = both.validate();
  CHECK(has_axiom(v, 6));
  CHECK_FALSE(both.is_valid());

  // collapsing an edge whose endpoints go to different vertices
  Graph edge = path_graph(1);
  MinorMorphism bad_ends(edge, edge, {{"v1", "v1"}, {"v2", "v2"}},
                         {{"e1", {EdgeFate::Contracted, "v1", false}}});
  v = bad_ends.validate();
  CHECK(has_axiom(v, 5));
  CHECK(has_axiom(v, 3));  // the target edge also lost its preimage

  // a kept edge with the twist pointing the wrong way
  MinorMorphism wrong_twist(edge, edge, {{"v1", "v1"}, {"v2", "v2"}},
                            {{"e1", {EdgeFate::Kept, "e1", true}}});
  CHECK(has_axiom(wrong_twist.validate(), 4));

  // two edges riding on the same target edge
  Graph single = Graph::make({"v1", "v2"}, {{"e1", "v1", "v2"}});
  MinorMorphism doubled(c2, single, {{"v1", "v1"}, {"v2", "v2"}},
                        {{"e1", {EdgeFate::Kept, "e1", false}},
                         {"e2", {EdgeFate::Kept, "e1", false}}});
  CHECK(has_axiom(doubled.validate(), 3));

  // a target vertex nobody maps to
  MinorMorphism missed(edge, edge, {{"v1", "v1"}, {"v2", "v1"}},
                       {{"e1", {EdgeFate::Deleted, "", false}}});
  v = missed.validate();
  CHECK(has_axiom(v, 6));
}

TEST_CASE("edge deletion keeps connectivity or refuses") {
  auto [path, phi] = delete_edge(cycle_graph(3), "e2");
  CHECK(path.edge_count() == 2);
  CHECK(path.vertex_count() == 3);
  CHECK(phi.is_valid());
  CHECK(phi.edge_map().at("e2").fate == EdgeFate::Deleted);
  CHECK(edge_injection(phi).at("e1") == "e1");

  CHECK_THROWS_AS(delete_edge(two_star_tree(1, 1), "c"), Error);
  try {
    delete_edge(two_star_tree(1, 1), "c");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WouldDisconnect);
  }

  // loops always delete cleanly
  auto [pt, psi] = delete_edge(loop(), "e");
  CHECK(pt.edge_count() == 0);
  CHECK(psi.is_valid());
}

TEST_CASE("edge contraction merges endpoints and keeps parallels") {
  auto [m, phi] = contract_edge(complete_graph(3), "e1_2");
  CHECK(m.vertex_count() == 2);
  CHECK(m.edge_count() == 2);
  CHECK(m.edge_ends("e1_3") == std::pair<std::string, std::string>{"v1", "v3"});
  CHECK(m.edge_ends("e2_3") == std::pair<std::string, std::string>{"v1", "v3"});
  CHECK(phi.is_valid());
  CHECK(phi.vertex_map().at("v2") == "v1");

  // contracting a parallel edge of the result makes a loop
  auto [m2, psi] = contract_edge(m, "e1_3");
  CHECK(m2.vertex_count() == 1);
  CHECK(m2.edge_count() == 1);
  CHECK(m2.is_loop(0));
  CHECK(psi.is_valid());

  CHECK_THROWS_AS(contract_edge(loop(), "e"), Error);
  try {
    contract_edge(loop(), "e");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContractLoop);
  }
}

TEST_CASE("composition is associative with identities and tracks fates") {
  Graph c3 = cycle_graph(3);
  auto [p2, del3] = delete_edge(c3, "e3");
  auto [p1, con2] = contract_edge(p2, "e2");

  auto both = compose(del3, con2);
  CHECK(both.is_valid());
  CHECK(both.source() == c3);
  CHECK(both.target() == p1);
  CHECK(both.edge_map().at("e1").fate == EdgeFate::Kept);
  CHECK(both.edge_map().at("e2").fate == EdgeFate::Contracted);
  CHECK(both.edge_map().at("e3").fate == EdgeFate::Deleted);

  CHECK(compose(identity_morphism(c3), del3) == del3);
  CHECK(compose(del3, identity_morphism(p2)) == del3);
  CHECK_THROWS_AS(compose(con2, del3), Error);

  // edge injections compose contravariantly
  auto inj = edge_injection(both);
  CHECK(inj.size() == 1);
  CHECK(inj.at("e1") == "e1");
  auto inj_del = edge_injection(del3);
  auto inj_con = edge_injection(con2);
  for (const auto& [e, pre] : inj) CHECK(pre == inj_del.at(inj_con.at(e)));
}

TEST_CASE("enumeration counts match spanning trees into a point") {
  for (long n = 2; n <= 5; ++n) {
    Graph g = complete_graph(n);
    auto homs = enumerate_minor_morphisms(g, point(), 10);
    Int expect = 1;
    for (long i = 0; i < n - 2; ++i) expect *= n;
    CHECK(Int((long long)homs.size()) == expect);
    CHECK(Int((long long)homs.size()) == spanning_tree_count(g));
  }
  CHECK(enumerate_minor_morphisms(loop(), point()).size() == 1);
  CHECK(enumerate_minor_morphisms(cycle_graph(5), point()).size() == 5);
}

TEST_CASE("enumeration on small hand-counted cases") {
  Graph edge = path_graph(1);
  CHECK(enumerate_minor_morphisms(edge, edge).size() == 2);
  CHECK(enumerate_minor_morphisms(loop(), loop()).size() == 2);
  CHECK(enumerate_minor_morphisms(complete_graph(3), edge).size() == 12);
  CHECK(enumerate_minor_morphisms(path_graph(2), edge).size() == 4);
  CHECK(enumerate_minor_morphisms(edge, complete_graph(3)).empty());
  CHECK(enumerate_minor_morphisms(edge, loop()).empty());  // no edge left to keep
  CHECK(enumerate_minor_morphisms(cycle_graph(2), loop()).size() == 4);
}

TEST_CASE("enumeration output is sound, duplicate-free and sorted") {
  std::vector<std::pair<Graph, Graph>> pairs = {
      {complete_graph(3), path_graph(1)},
      {cycle_graph(2), loop()},
      {path_graph(3), path_graph(2)},
      {loop_bouquet(2), loop()},
  };
  for (const auto& [g, h] : pairs) {
    auto homs = enumerate_minor_morphisms(g, h);
    for (const auto& phi : homs) {
      CHECK(phi.is_valid());
      CHECK(phi.source() == g);
      CHECK(phi.target() == h);
    }
    for (std::size_t i = 0; i + 1 < homs.size(); ++i) {
      CHECK(homs[i] < homs[i + 1]);
      CHECK_FALSE(homs[i] == homs[i + 1]);
    }
  }
}

TEST_CASE("self-maps of a graph are exactly its automorphisms") {
  for (const auto& g : {complete_graph(3), cycle_graph(2), path_graph(2), loop_bouquet(1)}) {
    auto homs = enumerate_minor_morphisms(g, g);
    CHECK(Int((long long)homs.size()) == automorphisms(g).order);
  }
}

TEST_CASE("counts respect the kept-edge binomial bound") {
  std::vector<Graph> sources = {complete_graph(3), path_graph(2), cycle_graph(2),
                                loop_bouquet(1),   path_graph(1), loop()};
  std::vector<Graph> targets = {path_graph(1), loop(), point(), cycle_graph(2)};
  for (const auto& g : sources) {
    for (const auto& h : targets) {
      Int count = (long long)enumerate_minor_morphisms(g, h).size();
      Int bound = automorphisms(h).order *
                  binomial((long)g.edge_count(), (long)h.edge_count()) *
                  binomial((long)(g.edge_count() - h.edge_count()),
                           (long)(g.genus() - h.genus()));
      CHECK(count <= bound);
    }
  }
}

TEST_CASE("functoriality of the edge injection over composable pairs") {
  Graph p3 = path_graph(3);
  Graph p2 = path_graph(2);
  Graph p1 = path_graph(1);
  auto first = enumerate_minor_morphisms(p3, p2);
  auto second = enumerate_minor_morphisms(p2, p1);
  REQUIRE(!first.empty());
  REQUIRE(!second.empty());
  for (const auto& phi : first) {
    for (const auto& psi : second) {
      auto whole = compose(phi, psi);
      CHECK(whole.is_valid());
      auto inj = edge_injection(whole);
      auto inj_phi = edge_injection(phi);
      auto inj_psi = edge_injection(psi);
      for (const auto& [e, pre] : inj) CHECK(pre == inj_phi.at(inj_psi.at(e)));
    }
  }
}

TEST_CASE("enumeration respects the size cap") {
  CHECK_THROWS_AS(enumerate_minor_morphisms(complete_graph(5), point()), Error);
  try {
    enumerate_minor_morphisms(complete_graph(5), point());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_SUITE_END();
