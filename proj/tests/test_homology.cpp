#include <vector>

#include "doctest.h"
#include "minorhom/homology.hpp"

using namespace minorhom;

namespace {

// six-vertex triangulation of the real projective plane
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "2", "6"}, {"1", "4", "5"}, {"1", "5", "6"},
       {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"}, {"3", "4", "6"}, {"3", "5", "6"}});
}

SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_facets({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
}

std::vector<std::vector<Rat>> mat_mul(const std::vector<std::vector<Rat>>& a,
                                      const std::vector<std::vector<Rat>>& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("homology");

TEST_CASE("circle, point and sphere-like sanity values") {
  auto tri = hollow_triangle();
  CHECK(homology(tri, 1, Coefficients::integers(), true) == HomologyGroup{1, {}});
  CHECK(homology(tri, 0, Coefficients::integers(), true) == HomologyGroup{0, {}});
  CHECK(homology(tri, 0, Coefficients::integers(), false) == HomologyGroup{1, {}});
  CHECK(homology(tri, 2, Coefficients::integers(), true).trivial());
  CHECK(homology(tri, 1, Coefficients::rationals(), true).free_rank == 1);
  CHECK(homology(tri, 1, Coefficients::mod(7), true).free_rank == 1);

  auto one_point = SimplicialComplex::from_facets({"a"}, {{"a"}});
  CHECK(homology(one_point, 0, Coefficients::integers(), true).trivial());
  CHECK(homology(one_point, 0, Coefficients::integers(), false) == HomologyGroup{1, {}});
}

TEST_CASE("degree conventions for the void and empty-face complexes") {
  auto none = SimplicialComplex::void_complex({"a"});
  auto empty = SimplicialComplex::empty_face_only({"a"});
  for (int i : {-1, 0, 1})
    CHECK(homology(none, i, Coefficients::integers(), true).trivial());
  CHECK(homology(empty, -1, Coefficients::integers(), true) == HomologyGroup{1, {}});
  CHECK(homology(empty, 0, Coefficients::integers(), true).trivial());
  CHECK(homology(hollow_triangle(), -1, Coefficients::integers(), true).trivial());

  CHECK_THROWS_AS(homology(empty, -2, Coefficients::integers(), true), Error);
  CHECK_THROWS_AS(homology(empty, -1, Coefficients::integers(), false), Error);
}

TEST_CASE("projective plane: 2-torsion where it belongs") {
  auto rp2 = projective_plane();
  CHECK(rp2.euler_characteristic() == 1);
  OrientedBoundary b(rp2, true);
  CHECK(b.squares_to_zero());

  auto h1 = homology(rp2, 1, Coefficients::integers(), true);
  CHECK(h1.free_rank == 0);
  CHECK(h1.torsion == std::vector<Int>{2});
  CHECK(h1.exponent() == 2);
  CHECK(homology(rp2, 2, Coefficients::integers(), true).trivial());
  CHECK(homology(rp2, 0, Coefficients::integers(), true).trivial());

  // over F2 the torsion shows up one degree higher as well
  CHECK(homology(rp2, 1, Coefficients::mod(2), true).free_rank == 1);
  CHECK(homology(rp2, 2, Coefficients::mod(2), true).free_rank == 1);
  CHECK(homology(rp2, 1, Coefficients::rationals(), true).free_rank == 0);

  for (int i : {0, 1, 2})
    for (long long p : {2, 3, 5, 7}) CHECK(uct_consistency(rp2, i, p));
}

TEST_CASE("matching complexes of complete graphs") {
  auto mk4 = matching_complex(complete_graph(4));
  CHECK(homology(mk4, 0, Coefficients::integers(), true) == HomologyGroup{2, {}});
  CHECK(homology(mk4, 1, Coefficients::integers(), true).trivial());

  auto mk5 = matching_complex(complete_graph(5));
  CHECK(homology(mk5, 0, Coefficients::integers(), true).trivial());
  auto h1 = homology(mk5, 1, Coefficients::integers(), true);
  CHECK(h1 == HomologyGroup{6, {}});
}

TEST_CASE("two-star trees: component and cycle counts grow quadratically") {
  for (long n = 2; n <= 4; ++n) {
    auto m = matching_complex(two_star_tree(n, n));
    CHECK(homology(m, 0, Coefficients::integers(), false).free_rank == 2);
    auto h1 = homology(m, 1, Coefficients::integers(), false);
    CHECK(h1.free_rank == (n - 1) * (n - 1));
    CHECK(h1.torsion.empty());
  }
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
  std::vector<SimplicialComplex> corpus = {
      projective_plane(), matching_complex(complete_graph(5)),
      flag_complex_of_line_graph(complete_graph(4)),
      d_matching_complex(complete_graph(4), 2), matching_complex(two_star_tree(2, 2))};
  for (const auto& c : corpus) {
    Int alt = 0;
    for (int i = 0; i <= c.dimension(); ++i) {
      long r = homology(c, i, Coefficients::rationals(), false).free_rank;
      CHECK(homology(c, i, Coefficients::integers(), false).free_rank == r);
      alt += (i % 2 == 0) ? Int(r) : Int(-r);
    }
    CHECK(alt == c.euler_characteristic());
    for (int i = 0; i <= c.dimension(); ++i)
      for (long long p : {2, 3, 5, 7}) CHECK(uct_consistency(c, i, p));
  }
}

TEST_CASE("integral bases: generators have unit coordinates") {
  auto rp2 = projective_plane();
  IntegralBasis basis(rp2, 1, true);
  CHECK(basis.group().torsion == std::vector<Int>{2});
  CHECK(basis.generators().size() == 1);
  auto coords = basis.coordinates(basis.generators()[0]);
  CHECK(coords == std::vector<Int>{1});

  auto tri = hollow_triangle();
  IntegralBasis circle(tri, 1, true);
  CHECK(circle.group() == HomologyGroup{1, {}});
  auto z = circle.generators()[0];
  CHECK(circle.coordinates(z) == std::vector<Int>{1});
  // doubling the cycle doubles the coordinate
  for (auto& x : z) x *= 2;
  CHECK(circle.coordinates(z) == std::vector<Int>{2});
  // non-cycles are rejected
  std::vector<Int> not_cycle(tri.face_count(1), 0);
  not_cycle[0] = 1;
  CHECK_THROWS_AS(circle.coordinates(not_cycle), Error);
}

TEST_CASE("induced map of the identity is the identity matrix") {
  Graph k4 = complete_graph(4);
  auto id = identity_morphism(k4);
  auto m = induced_map_on_homology(id, matching_builder(), 0, Coefficients::rationals(), false);
  CHECK(m.from.free_rank == 3);
  CHECK(m.to.free_rank == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m.matrix[i][j] == (i == j ? Rat(1) : Rat(0)));

  auto mz = induced_map_on_homology(id, matching_builder(), 0, Coefficients::integers(), false);
  CHECK(mz.matrix == m.matrix);
}

TEST_CASE("contracting the second path edge includes a point class") {
  Graph p2 = path_graph(2);
  auto [p1, phi] = contract_edge(p2, "e2");
  REQUIRE(p1.edge_count() == 1);
  auto m = induced_map_on_homology(phi, matching_builder(), 0, Coefficients::integers(), false);
  CHECK(m.from == HomologyGroup{1, {}});
  CHECK(m.to == HomologyGroup{2, {}});
  REQUIRE(m.matrix.size() == 2);
  // the matching {e1} downstairs is the first basis vertex of the upstairs complex
  CHECK(m.matrix[0][0] == Rat(1));
  CHECK(m.matrix[1][0] == Rat(0));
}

TEST_CASE("induced maps compose contravariantly over Q") {
  Graph c3 = cycle_graph(3);
  Graph p2 = path_graph(2);
  Graph p1 = path_graph(1);
  auto first = enumerate_minor_morphisms(c3, p2);
  auto second = enumerate_minor_morphisms(p2, p1);
  REQUIRE(!first.empty());
  REQUIRE(!second.empty());
  for (const auto& phi : first) {
    for (const auto& psi : second) {
      auto whole = compose(phi, psi);
      for (int i : {0, 1}) {
        auto m_phi =
            induced_map_on_homology(phi, matching_builder(), i, Coefficients::rationals(), false);
        auto m_psi =
            induced_map_on_homology(psi, matching_builder(), i, Coefficients::rationals(), false);
        auto m_whole = induced_map_on_homology(whole, matching_builder(), i,
                                               Coefficients::rationals(), false);
        CHECK(m_whole.matrix == mat_mul(m_phi.matrix, m_psi.matrix));
      }
    }
  }
}

TEST_CASE("pentagon matchings: self-maps act by sign on the circle class") {
  Graph c5 = cycle_graph(5);
  auto autos = enumerate_minor_morphisms(c5, c5);
  CHECK(autos.size() == 10);
  auto mc = matching_complex(c5);
  CHECK(homology(mc, 1, Coefficients::integers(), true) == HomologyGroup{1, {}});
  for (const auto& phi : autos) {
    auto m =
        induced_map_on_homology(phi, matching_builder(), 1, Coefficients::integers(), true);
    REQUIRE(m.matrix.size() == 1);
    CHECK((m.matrix[0][0] == Rat(1) || m.matrix[0][0] == Rat(-1)));
  }
  auto idm = induced_map_on_homology(identity_morphism(c5), matching_builder(), 1,
                                     Coefficients::integers(), true);
  CHECK(idm.matrix[0][0] == Rat(1));
}

TEST_CASE("chain maps commute with the boundary") {
  Graph c3 = cycle_graph(3);
  Graph p1 = path_graph(1);
  for (const auto& phi : enumerate_minor_morphisms(c3, p1)) {
    for (const auto& builder : {matching_builder(), d_matching_builder(2), flag_builder()}) {
      auto ism = induced_simplicial_map(phi, builder);
      OrientedBoundary bf(ism.from, true);
      OrientedBoundary bt(ism.to, true);
      for (int k = 0; k <= ism.from.dimension(); ++k) {
        auto lhs = bt.matrix(k) * chain_map_matrix(ism, k, true);
        auto rhs = chain_map_matrix(ism, k - 1, true) * bf.matrix(k);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("non-functorial builders are refused with a witness") {
  // the full simplex on the edges touching the first vertex is not stable
  // under pulling back along contractions
  ComplexBuilder star{"first-vertex-star", [](const Graph& g) {
                        std::vector<std::string> facet;
                        for (int e : g.edges_at(0)) facet.push_back(g.edge_ids()[e]);
                        return SimplicialComplex::from_facets(g.edge_ids(), {facet});
                      }};
  Graph c3 = cycle_graph(3);
  auto [c2, phi] = contract_edge(c3, "e1");
  REQUIRE(c2.edge_count() == 2);
  try {
    induced_simplicial_map(phi, star);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFunctorial);
  }
}

TEST_SUITE_END();
