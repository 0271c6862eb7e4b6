#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minorhom/graph.hpp"

namespace minorhom {

// Chromatic polynomial by deletion-contraction with isomorphism-keyed
// memoization, coefficients lowest degree first.  Graphs with more than
// max_edges edges are rejected (TooLarge).
std::vector<Int> chromatic_polynomial(const SimpleGraph& h, std::size_t max_edges = 24);

Int evaluate_poly(const std::vector<Int>& coeffs, const Int& x);

// Graded ranks of the cohomology of the complement of the subspace
// arrangement attached to the edges of the complement line graph of a graph,
// with one codimension-d subspace per edge.  Generators sit in degree 2d-1,
// and the rank in degree j(2d-1) is the absolute value of a chromatic
// coefficient of the complement line graph.
struct PoincareVector {
  int generator_degree = 1;        // 2d - 1
  std::map<int, long long> ranks;  // cohomological degree -> rank, nonzero only

  long long rank(int degree) const {
    auto it = ranks.find(degree);
    return it == ranks.end() ? 0 : it->second;
  }
  // Equals the number of acyclic orientations of the complement line graph.
  long long total_rank() const {
    long long sum = 0;
    for (const auto& [deg, r] : ranks) sum += r;
    return sum;
  }
};

PoincareVector conf_poincare(const Graph& g, int d);

// One relation per simple cycle of the complement line graph: the signed sum
// of the monomials obtained by omitting one cycle edge at a time.  Signs come
// from traversing the cycle once, +1 where the traversal runs from the
// smaller endpoint to the larger, normalized so the first term is positive.
struct OSRelation {
  std::vector<int> cycle;  // generator indices of the circuit, ascending
  std::vector<std::pair<std::vector<int>, int>> terms;  // (monomial, sign)

  friend bool operator==(const OSRelation& a, const OSRelation& b) {
    return a.cycle == b.cycle && a.terms == b.terms;
  }
};

// Presentation of the cohomology ring: one generator per edge of the
// complement line graph (label "e|f" for the disjoint edge pair), squares of
// generators vanishing, and a cycle relation per simple cycle of length at
// most max_cycle_length (0 = unbounded).
struct OSPresentation {
  enum class Parity { Even, Odd };

  int generator_degree = 1;      // 2d - 1
  Parity parity = Parity::Odd;   // odd: commuting generators with squares zero
  std::vector<std::string> generators;
  std::vector<OSRelation> relations;
};

OSPresentation os_presentation(const Graph& g, int d, std::size_t max_cycle_length = 0);

// Rank of each graded piece of the presented algebra over the rationals,
// side by side with the chromatic prediction.
struct OsDegreeRank {
  int degree = 0;
  long long presented = 0;
  long long predicted = 0;
};

struct OsRankReport {
  int d = 1;
  int max_degree = 0;
  std::vector<OsDegreeRank> entries;  // one per degree 0..max_degree
  bool consistent = true;
};

OsRankReport os_rank_check(const Graph& g, int d, int max_degree);

}  // namespace minorhom
