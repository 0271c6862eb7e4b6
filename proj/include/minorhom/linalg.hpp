#pragma once

#include <optional>
#include <vector>

#include "minorhom/error.hpp"
#include "minorhom/numeric.hpp"
#include "minorhom/snf.hpp"

namespace minorhom {

// Exact dense elimination over a field.  Two instances: the rationals and a
// prime field given by a runtime modulus.  Everything downstream (ranks,
// kernels, induced maps, Betti numbers) runs through these.

struct RationalField {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) fail(ErrorKind::BadConfig, "division by zero");
    return 1 / a;
  }
  Elem from_int(const Int& x) const { return Rat(x); }
};

struct PrimeField {
  long long p;

  explicit PrimeField(long long prime) : p(prime) {
    if (prime < 2) fail(ErrorKind::BadConfig, "field characteristic must be >= 2");
    for (long long d = 2; d * d <= prime; ++d)
      if (prime % d == 0) fail(ErrorKind::BadConfig, "field characteristic must be prime");
  }

  using Elem = long long;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem inv(Elem a) const {
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    if (r != 1) fail(ErrorKind::BadConfig, "element not invertible");
    return (t % p + p) % p;
  }
  Elem from_int(const Int& x) const {
    Int r = x % p;
    if (r < 0) r += p;
    return r.convert_to<long long>();
  }
};

template <class F>
using FieldMatrix = std::vector<std::vector<typename F::Elem>>;

template <class F>
FieldMatrix<F> to_field_matrix(const F& f, const SparseIntMatrix& a) {
  FieldMatrix<F> out(a.rows(), std::vector<typename F::Elem>(a.cols(), f.zero()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, v] : a.row(r)) out[r][c] = f.from_int(v);
  return out;
}

// In-place reduced row echelon form; returns the rank and (optionally) the
// pivot columns in order.
template <class F>
std::size_t rref(const F& f, FieldMatrix<F>& a, std::vector<std::size_t>* pivot_cols = nullptr) {
  std::size_t rows = a.size(), cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && f.is_zero(a[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    typename F::Elem scale = f.inv(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = f.mul(a[r][j], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || f.is_zero(a[i][c])) continue;
      typename F::Elem coef = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(coef, a[r][j]));
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

template <class F>
std::size_t field_rank(const F& f, FieldMatrix<F> a) {
  return rref(f, a);
}

inline std::size_t rank_over_q(const SparseIntMatrix& a) {
  RationalField f;
  auto m = to_field_matrix(f, a);
  return field_rank(f, m);
}

inline std::size_t rank_mod_p(const SparseIntMatrix& a, long long p) {
  PrimeField f(p);
  auto m = to_field_matrix(f, a);
  return field_rank(f, m);
}

// Basis of the right kernel, one column vector per basis element, in the
// standard rref parametrization (deterministic).  A matrix with no rows loses
// its width, so the column count is explicit.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace_basis(const F& f, FieldMatrix<F> a,
                                                           std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = rref(f, a, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> out;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<typename F::Elem> vec(cols, f.zero());
    vec[free_c] = f.one();
    for (std::size_t r = 0; r < rank; ++r)
      vec[pivots[r]] = f.neg(a[r][free_c]);
    out.push_back(std::move(vec));
  }
  return out;
}

// Solve A x = b for a single right-hand side; std::nullopt if inconsistent.
// Free variables are set to zero, so solutions are deterministic.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& f, FieldMatrix<F> a,
                                                   const std::vector<typename F::Elem>& b) {
  std::size_t rows = a.size(), cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) fail(ErrorKind::Mismatch, "rhs length mismatch");
  for (std::size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
  std::vector<std::size_t> pivots;
  std::size_t rank = rref(f, a, &pivots);
  std::vector<typename F::Elem> x(cols, f.zero());
  for (std::size_t r = 0; r < rank; ++r) {
    if (pivots[r] == cols) return std::nullopt;  // pivot in the augmented column
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

}  // namespace minorhom
