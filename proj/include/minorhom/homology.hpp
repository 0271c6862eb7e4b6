#pragma once

#include <string>
#include <vector>

#include "minorhom/complex.hpp"
#include "minorhom/linalg.hpp"
#include "minorhom/minor.hpp"
#include "minorhom/snf.hpp"

namespace minorhom {

// Coefficient ring for homology: the integers, the rationals, or a prime field.
struct Coefficients {
  enum Kind { Z, Q, Fp } kind = Z;
  long long p = 0;

  static Coefficients integers() { return {Z, 0}; }
  static Coefficients rationals() { return {Q, 0}; }
  static Coefficients mod(long long p) { return {Fp, p}; }

  std::string name() const {
    switch (kind) {
      case Z: return "Z";
      case Q: return "Q";
      default: return "F" + std::to_string(p);
    }
  }
};

struct HomologyGroup {
  long free_rank = 0;
  std::vector<Int> torsion;  // invariant factors >= 2, each dividing the next

  Int exponent() const { return torsion.empty() ? Int(1) : torsion.back(); }
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) = default;
};

// (Reduced) simplicial homology in one degree.  Conventions: the void complex
// has zero homology everywhere; the empty-face-only complex has reduced
// homology = coefficients in degree -1; over a field, torsion is empty and
// free_rank doubles as the cohomology dimension in the same degree.
HomologyGroup homology(const SimplicialComplex& c, int i, const Coefficients& coeff,
                       bool reduced);

// dim_{F_p} H_i(F_p) == rank_Z H_i + #p-divisible factors of H_i and H_{i-1}.
bool uct_consistency(const SimplicialComplex& c, int i, long long p, bool reduced = true);

// Homology of a complex in one degree together with a deterministic basis:
// cycle representatives for the free generators first, then for each torsion
// factor.  Built from Smith normal forms of the two boundary matrices, so
// repeated runs give identical bases.
class IntegralBasis {
 public:
  IntegralBasis(const SimplicialComplex& c, int i, bool reduced);

  const HomologyGroup& group() const { return group_; }
  // Chain representatives, one per generator (free then torsion), as columns.
  const std::vector<std::vector<Int>>& generators() const { return generators_; }
  // Coordinates of a cycle in the generator basis; torsion coordinates are
  // reduced into [0, order).  Fails Mismatch if z is not a cycle.
  std::vector<Int> coordinates(const std::vector<Int>& z) const;

 private:
  std::size_t chain_dim_ = 0;
  SparseIntMatrix lower_;                   // boundary out of degree i
  std::vector<std::vector<Int>> kernel_;    // columns: basis of the cycle lattice
  std::vector<std::vector<Int>> extract_;   // kernel coordinates of a cycle
  SnfResult pres_;                          // SNF of the presentation matrix
  std::vector<std::size_t> order_;          // generator index -> row of pres
  HomologyGroup group_;
  std::vector<std::vector<Int>> generators_;
};

// The map H_i(builder(target)) -> H_i(builder(source)) induced by a minor
// morphism, in the deterministic bases above (or their field analogues).
// Rows/columns are ordered free generators first, then torsion; over a field
// there are no torsion rows and entries lie in the prime field / rationals.
struct InducedHomologyMap {
  HomologyGroup from;
  HomologyGroup to;
  std::vector<std::vector<Rat>> matrix;  // (to generators) x (from generators)
};

InducedHomologyMap induced_map_on_homology(const MinorMorphism& phi,
                                           const ComplexBuilder& builder, int i,
                                           const Coefficients& coeff, bool reduced);

}  // namespace minorhom
