#include "minorhom/homology.hpp"

#include <algorithm>

namespace minorhom {

namespace {

void check_degree(int i, bool reduced) {
  if (i < (reduced ? -1 : 0))
    fail(ErrorKind::BadDegree, (reduced ? std::string("reduced") : std::string("plain")) +
                                   " homology undefined in degree " + std::to_string(i));
}

std::vector<Int> apply_sparse(const SparseIntMatrix& a, const std::vector<Int>& x) {
  if (x.size() != a.cols()) fail(ErrorKind::Mismatch, "vector length mismatch");
  std::vector<Int> out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, v] : a.row(r)) out[r] += v * x[c];
  return out;
}

}  // namespace

HomologyGroup homology(const SimplicialComplex& c, int i, const Coefficients& coeff,
                       bool reduced) {
  check_degree(i, reduced);
  HomologyGroup h;
  if (c.is_void()) return h;
  OrientedBoundary b(c, reduced);
  std::size_t n = b.chain_dim(i);
  if (n == 0) return h;
  const SparseIntMatrix& lower = b.matrix(i);
  const SparseIntMatrix& upper = b.matrix(i + 1);

  switch (coeff.kind) {
    case Coefficients::Z: {
      std::size_t r1 = smith_normal_form(lower).rank;
      SnfResult up = smith_normal_form(upper);
      h.free_rank = (long)n - (long)r1 - (long)up.rank;
      for (const auto& d : up.invariant_factors)
        if (d > 1) h.torsion.push_back(d);
      break;
    }
    case Coefficients::Q:
      h.free_rank = (long)n - (long)rank_over_q(lower) - (long)rank_over_q(upper);
      break;
    case Coefficients::Fp:
      h.free_rank =
          (long)n - (long)rank_mod_p(lower, coeff.p) - (long)rank_mod_p(upper, coeff.p);
      break;
  }
  return h;
}

bool uct_consistency(const SimplicialComplex& c, int i, long long p, bool reduced) {
  auto count_p = [p](const HomologyGroup& h) {
    long n = 0;
    for (const auto& d : h.torsion)
      if (d % p == 0) ++n;
    return n;
  };
  HomologyGroup over_z = homology(c, i, Coefficients::integers(), reduced);
  long below = 0;
  if (i - 1 >= (reduced ? -1 : 0))
    below = count_p(homology(c, i - 1, Coefficients::integers(), reduced));
  HomologyGroup mod_p = homology(c, i, Coefficients::mod(p), reduced);
  return mod_p.free_rank == over_z.free_rank + count_p(over_z) + below;
}

// --- integral bases -----------------------------------------------------------

IntegralBasis::IntegralBasis(const SimplicialComplex& c, int i, bool reduced) {
  check_degree(i, reduced);
  if (c.is_void()) return;
  OrientedBoundary b(c, reduced);
  chain_dim_ = b.chain_dim(i);
  lower_ = b.matrix(i);
  if (chain_dim_ == 0) return;
  const SparseIntMatrix& upper = b.matrix(i + 1);

  SnfResult low = smith_normal_form(lower_, true);
  std::size_t n = chain_dim_;
  std::size_t k = n - low.rank;  // cycle lattice dimension

  for (std::size_t j = low.rank; j < n; ++j) {
    std::vector<Int> col(n);
    for (std::size_t t = 0; t < n; ++t) col[t] = low.v[t][j];
    kernel_.push_back(std::move(col));
  }
  for (std::size_t j = low.rank; j < n; ++j) extract_.push_back(low.v_inv[j]);

  // image of the upper boundary in cycle coordinates presents the homology
  SparseIntMatrix pres_input(k, upper.cols());
  for (std::size_t t = 0; t < upper.rows(); ++t)
    for (const auto& [j, val] : upper.row(t))
      for (std::size_t a = 0; a < k; ++a)
        if (extract_[a][t] != 0) pres_input.add_to(a, j, extract_[a][t] * val);
  pres_ = smith_normal_form(pres_input, true);

  group_.free_rank = (long)(k - pres_.rank);
  for (std::size_t j = pres_.rank; j < k; ++j) order_.push_back(j);
  for (std::size_t j = 0; j < pres_.rank; ++j)
    if (pres_.invariant_factors[j] > 1) {
      order_.push_back(j);
      group_.torsion.push_back(pres_.invariant_factors[j]);
    }

  for (std::size_t g = 0; g < order_.size(); ++g) {
    std::size_t j = order_[g];
    std::vector<Int> chain(n, 0);
    for (std::size_t a = 0; a < k; ++a) {
      const Int& coef = pres_.u_inv[a][j];
      if (coef == 0) continue;
      for (std::size_t t = 0; t < n; ++t) chain[t] += coef * kernel_[a][t];
    }
    generators_.push_back(std::move(chain));
  }
}

std::vector<Int> IntegralBasis::coordinates(const std::vector<Int>& z) const {
  if (z.size() != chain_dim_) fail(ErrorKind::Mismatch, "chain has the wrong length");
  if (chain_dim_ == 0) return {};
  for (const Int& x : apply_sparse(lower_, z))
    if (x != 0) fail(ErrorKind::Mismatch, "chain is not a cycle");

  std::size_t k = kernel_.size();
  std::vector<Int> kz(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t t = 0; t < chain_dim_; ++t) kz[a] += extract_[a][t] * z[t];

  std::vector<Int> h(k, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t a = 0; a < k; ++a) h[j] += pres_.u[j][a] * kz[a];

  std::vector<Int> coords;
  std::size_t free_count = k - pres_.rank;
  for (std::size_t g = 0; g < order_.size(); ++g) {
    std::size_t j = order_[g];
    if (g < free_count) {
      coords.push_back(h[j]);
    } else {
      Int d = pres_.invariant_factors[j];
      Int v = h[j] % d;
      if (v < 0) v += d;
      coords.push_back(v);
    }
  }
  return coords;
}

// --- induced maps ---------------------------------------------------------

namespace {

template <class F>
struct FieldReducer {
  const F& f;
  std::vector<std::pair<std::size_t, std::vector<typename F::Elem>>> rows;

  explicit FieldReducer(const F& field) : f(field) {}

  // Reduces v against the stored rows in place; true if a nonzero remainder
  // was stored (v was independent).
  bool add(std::vector<typename F::Elem> v) {
    for (const auto& [p, row] : rows) {
      if (f.is_zero(v[p])) continue;
      typename F::Elem coef = v[p];
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.sub(v[t], f.mul(coef, row[t]));
    }
    std::size_t p = 0;
    while (p < v.size() && f.is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    typename F::Elem scale = f.inv(v[p]);
    for (auto& x : v) x = f.mul(x, scale);
    rows.emplace_back(p, std::move(v));
    return true;
  }
};

template <class F>
struct FieldBasisData {
  std::vector<std::vector<typename F::Elem>> image;  // basis of the boundary image
  std::vector<std::vector<typename F::Elem>> reps;   // homology representatives
  std::size_t chain_dim = 0;
};

template <class F>
FieldBasisData<F> field_basis(const F& f, const SimplicialComplex& c, int i, bool reduced) {
  FieldBasisData<F> out;
  if (c.is_void()) return out;
  OrientedBoundary b(c, reduced);
  out.chain_dim = b.chain_dim(i);
  if (out.chain_dim == 0) return out;
  auto lower = to_field_matrix(f, b.matrix(i));
  auto upper = to_field_matrix(f, b.matrix(i + 1));

  std::vector<std::size_t> pivots;
  auto upper_copy = upper;
  rref(f, upper_copy, &pivots);
  for (std::size_t c_idx : pivots) {
    std::vector<typename F::Elem> col(out.chain_dim, f.zero());
    for (std::size_t r = 0; r < out.chain_dim; ++r) col[r] = upper[r][c_idx];
    out.image.push_back(std::move(col));
  }

  FieldReducer<F> span(f);
  for (const auto& col : out.image) span.add(col);
  for (auto& z : nullspace_basis(f, lower, out.chain_dim))
    if (span.add(z)) out.reps.push_back(std::move(z));
  return out;
}

template <class F>
std::vector<typename F::Elem> field_coordinates(const F& f, const FieldBasisData<F>& basis,
                                                const std::vector<typename F::Elem>& w) {
  std::size_t cols = basis.image.size() + basis.reps.size();
  FieldMatrix<F> m(basis.chain_dim, std::vector<typename F::Elem>(cols, f.zero()));
  for (std::size_t j = 0; j < basis.image.size(); ++j)
    for (std::size_t r = 0; r < basis.chain_dim; ++r) m[r][j] = basis.image[j][r];
  for (std::size_t j = 0; j < basis.reps.size(); ++j)
    for (std::size_t r = 0; r < basis.chain_dim; ++r)
      m[r][basis.image.size() + j] = basis.reps[j][r];
  auto x = solve(f, std::move(m), w);
  if (!x) fail(ErrorKind::Mismatch, "image chain is not a cycle of the downstairs complex");
  return std::vector<typename F::Elem>(x->begin() + (long)basis.image.size(), x->end());
}

template <class F>
InducedHomologyMap field_induced_map(const F& f, const InducedSimplicialMap& ism, int i,
                                     bool reduced,
                                     const std::function<Rat(typename F::Elem)>& to_rat) {
  auto from = field_basis(f, ism.from, i, reduced);
  auto to = field_basis(f, ism.to, i, reduced);
  SparseIntMatrix t = chain_map_matrix(ism, i, reduced);

  InducedHomologyMap out;
  out.from = {(long)from.reps.size(), {}};
  out.to = {(long)to.reps.size(), {}};
  out.matrix.assign(to.reps.size(), std::vector<Rat>(from.reps.size(), Rat(0)));
  for (std::size_t j = 0; j < from.reps.size(); ++j) {
    std::vector<typename F::Elem> w(t.rows(), f.zero());
    for (std::size_t r = 0; r < t.rows(); ++r) {
      typename F::Elem acc = f.zero();
      for (const auto& [c_idx, val] : t.row(r))
        acc = f.add(acc, f.mul(f.from_int(val), from.reps[j][c_idx]));
      w[r] = acc;
    }
    auto col = field_coordinates(f, to, w);
    for (std::size_t r = 0; r < col.size(); ++r) out.matrix[r][j] = to_rat(col[r]);
  }
  return out;
}

}  // namespace

InducedHomologyMap induced_map_on_homology(const MinorMorphism& phi,
                                           const ComplexBuilder& builder, int i,
                                           const Coefficients& coeff, bool reduced) {
  check_degree(i, reduced);
  InducedSimplicialMap ism = induced_simplicial_map(phi, builder);

  if (coeff.kind == Coefficients::Q) {
    RationalField f;
    return field_induced_map(f, ism, i, reduced, [](const Rat& x) { return x; });
  }
  if (coeff.kind == Coefficients::Fp) {
    PrimeField f(coeff.p);
    return field_induced_map(f, ism, i, reduced,
                             [](long long x) { return Rat((long long)x); });
  }

  IntegralBasis from(ism.from, i, reduced);
  IntegralBasis to(ism.to, i, reduced);
  SparseIntMatrix t = chain_map_matrix(ism, i, reduced);

  InducedHomologyMap out;
  out.from = from.group();
  out.to = to.group();
  std::size_t cols = from.generators().size();
  std::size_t rows = to.generators().size();
  out.matrix.assign(rows, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Int> w = apply_sparse(t, from.generators()[j]);
    std::vector<Int> col = to.coordinates(w);
    for (std::size_t r = 0; r < rows; ++r) out.matrix[r][j] = Rat(col[r]);
  }
  return out;
}

}  // namespace minorhom
