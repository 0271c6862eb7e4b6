#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minorhom/complex.hpp"

namespace minorhom {

// Squarefree monomial ideal in variables named by strings (edge ids when the
// ideal comes from a graph).  Generators are kept as a minimal generating set:
// sorted subsets of the variables, pairwise incomparable under inclusion.
struct SquarefreeMonomialIdeal {
  std::vector<std::string> variables;                // sorted, distinct
  std::vector<std::vector<std::string>> generators;  // sorted sets, minimal, lex order

  // Sorts, deduplicates and minimalizes.  Generators must draw their variables
  // from `variables` (NotSubset otherwise).
  static SquarefreeMonomialIdeal make(std::vector<std::string> variables,
                                      std::vector<std::vector<std::string>> generators);

  bool is_zero() const { return generators.empty(); }

  // Membership of the monomial with the given exponent vector (missing
  // variables mean exponent zero): true iff some generator divides it.
  bool contains(const std::map<std::string, int>& exponents) const;
};

// Ideal generated by the products x_e x_f over pairs of edges of g that share
// no vertex.  Its Stanley-Reisner complex is flag_complex_of_line_graph(g).
SquarefreeMonomialIdeal edge_ideal_lc(const Graph& g);

// Graded Betti number beta_{i,sigma} of edge_ideal_lc(g) over a field, read
// off the restricted flag complex: the dimension of its reduced cohomology in
// degree |sigma| - i - 2.  characteristic 0 means the rationals, otherwise a
// prime p for F_p (BadConfig when composite).  sigma must consist of edge ids
// of g (UnknownEdge); i must be nonnegative (BadDegree).
long hochster_betti(const Graph& g, int i, const std::vector<std::string>& sigma,
                    long long characteristic = 0);

// The same Betti number computed from first principles: the homology of the
// Koszul complex of the ambient polynomial ring tensored with the ideal, in
// the given multidegree.  Exponential in the number of variables, so capped at
// 8 (TooLarge).  Multidegree keys must be variables of the ideal with
// nonnegative exponents (Mismatch).  Accepts non-squarefree multidegrees,
// where the result is provably zero; computing that zero is the point.
long koszul_betti_oracle(const SquarefreeMonomialIdeal& ideal, int i,
                         const std::map<std::string, int>& sigma,
                         long long characteristic = 0);

// Sum of beta_{i,sigma} over all sigma of size a.
long coarse_betti(const Graph& g, int i, int a, long long characteristic = 0);

// Largest a with coarse_betti(g, i, a) nonzero; -1 when every degree vanishes.
int max_nonzero_degree(const Graph& g, int i, long long characteristic = 0);

// All nonzero beta_{i,sigma} for 0 <= i <= max_i, keyed by (i, sorted sigma).
struct BettiTable {
  std::map<std::pair<int, std::vector<std::string>>, long> entries;
};

BettiTable betti_table(const Graph& g, int max_i, long long characteristic = 0);

}  // namespace minorhom
