#include "minorhom/snf.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace minorhom {

SparseIntMatrix SparseIntMatrix::transposed() const {
  SparseIntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.set((std::size_t)c, r, v);
  return out;
}

std::vector<std::vector<Int>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Int>> out(rows_, std::vector<Int>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Int>>& d) {
  SparseIntMatrix out(d.size(), d.empty() ? 0 : d[0].size());
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < d[r].size(); ++c)
      if (d[r][c] != 0) out.set(r, c, d[r][c]);
  return out;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::Mismatch, "matrix product shape mismatch");
  SparseIntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [k, av] : a.row(r))
      for (const auto& [c, bv] : b.row((std::size_t)k)) out.add_to(r, (std::size_t)c, av * bv);
  return out;
}

std::vector<std::vector<Int>> dense_mul(const std::vector<std::vector<Int>>& a,
                                        const std::vector<std::vector<Int>>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<Int>> out(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

Int dense_determinant(std::vector<std::vector<Int>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

namespace {

// Working state for the elimination.  Row-major entry maps plus a per-column
// index of occupied rows, so pivot search and column operations stay cheap.
struct Eliminator {
  std::size_t nrows, ncols;
  std::vector<std::map<int, Int>> rows;
  std::vector<std::set<int>> col_rows;
  bool track;
  std::vector<std::vector<Int>> u, v, u_inv, v_inv;
  int det_u = 1, det_v = 1;

  Eliminator(const SparseIntMatrix& a, bool with_transforms)
      : nrows(a.rows()), ncols(a.cols()), rows(a.rows()), col_rows(a.cols()),
        track(with_transforms) {
    for (std::size_t r = 0; r < nrows; ++r)
      for (const auto& [c, val] : a.row(r)) {
        rows[r][c] = val;
        col_rows[c].insert((int)r);
      }
    if (track) {
      auto eye = [](std::size_t n) {
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return m;
      };
      u = eye(nrows);
      u_inv = eye(nrows);
      v = eye(ncols);
      v_inv = eye(ncols);
    }
  }

  Int entry(int r, int c) const {
    auto it = rows[r].find(c);
    return it == rows[r].end() ? Int(0) : it->second;
  }

  void put(int r, int c, const Int& val) {
    if (val == 0) {
      rows[r].erase(c);
      col_rows[c].erase(r);
    } else {
      rows[r][c] = val;
      col_rows[c].insert(r);
    }
  }

  void row_swap(int i, int j) {
    if (i == j) return;
    for (const auto& [c, val] : rows[i]) col_rows[c].erase(i);
    for (const auto& [c, val] : rows[j]) col_rows[c].erase(j);
    std::swap(rows[i], rows[j]);
    for (const auto& [c, val] : rows[i]) col_rows[c].insert(i);
    for (const auto& [c, val] : rows[j]) col_rows[c].insert(j);
    if (track) {
      std::swap(u[i], u[j]);
      det_u = -det_u;
      for (auto& r : u_inv) std::swap(r[i], r[j]);
    }
  }

  void row_negate(int i) {
    for (auto& [c, val] : rows[i]) val = -val;
    if (track) {
      for (auto& x : u[i]) x = -x;
      det_u = -det_u;
      for (auto& r : u_inv) r[i] = -r[i];
    }
  }

  // row_i += q * row_j
  void row_addmul(int i, int j, const Int& q) {
    if (q == 0) return;
    for (const auto& [c, val] : rows[j]) {
      Int nv = entry(i, c) + q * val;
      put(i, c, nv);
    }
    if (track) {
      for (std::size_t c = 0; c < nrows; ++c) u[i][c] += q * u[j][c];
      for (std::size_t r = 0; r < nrows; ++r) u_inv[r][j] -= q * u_inv[r][i];
    }
  }

  void col_swap(int c, int d) {
    if (c == d) return;
    std::set<int> touched = col_rows[c];
    touched.insert(col_rows[d].begin(), col_rows[d].end());
    for (int r : touched) {
      Int vc = entry(r, c), vd = entry(r, d);
      put(r, c, vd);
      put(r, d, vc);
    }
    if (track) {
      for (auto& row : v) std::swap(row[c], row[d]);
      det_v = -det_v;
      std::swap(v_inv[c], v_inv[d]);
    }
  }

  void col_negate(int c) {
    for (int r : std::vector<int>(col_rows[c].begin(), col_rows[c].end()))
      put(r, c, -entry(r, c));
    if (track) {
      for (auto& row : v) row[c] = -row[c];
      det_v = -det_v;
      for (auto& x : v_inv[c]) x = -x;
    }
  }

  // col_c += q * col_d
  void col_addmul(int c, int d, const Int& q) {
    if (q == 0) return;
    for (int r : std::vector<int>(col_rows[d].begin(), col_rows[d].end()))
      put(r, c, entry(r, c) + q * entry(r, d));
    if (track) {
      for (auto& row : v) row[c] += q * row[d];
      for (std::size_t j = 0; j < ncols; ++j) v_inv[d][j] -= q * v_inv[c][j];
    }
  }
};

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& a, bool with_transforms) {
  Eliminator e(a, with_transforms);
  const std::size_t n = e.nrows, m = e.ncols;
  std::size_t t = 0;

  while (t < n && t < m) {
    // Pivot: smallest absolute value first, Markowitz fill-in score to break
    // ties, then position for determinism.
    int pr = -1, pc = -1;
    Int best_abs = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = t; r < n; ++r) {
      for (const auto& [c, val] : e.rows[r]) {
        if ((std::size_t)c < t) continue;
        Int av = abs_int(val);
        std::size_t cost = (e.rows[r].size() - 1) * (e.col_rows[c].size() - 1);
        bool better = pr < 0 || av < best_abs || (av == best_abs && cost < best_cost);
        if (better) {
          pr = (int)r;
          pc = c;
          best_abs = av;
          best_cost = cost;
        }
      }
    }
    if (pr < 0) break;  // submatrix is zero
    e.row_swap((int)t, pr);
    e.col_swap((int)t, pc);

    while (true) {
      bool swapped = false;
      // Clear column t with row operations; a nonzero remainder becomes the
      // new, strictly smaller pivot.
      bool col_dirty = true;
      while (col_dirty) {
        col_dirty = false;
        std::vector<int> occupants(e.col_rows[t].begin(), e.col_rows[t].end());
        for (int r : occupants) {
          if (r == (int)t) continue;
          Int val = e.entry(r, (int)t);
          if (val == 0) continue;
          Int q = balanced_quotient(val, e.entry((int)t, (int)t));
          e.row_addmul(r, (int)t, -q);
          if (e.entry(r, (int)t) != 0) {
            e.row_swap((int)t, r);
            swapped = true;
            col_dirty = true;
            break;
          }
        }
      }
      // Clear row t with column operations.
      bool row_dirty = true;
      while (row_dirty) {
        row_dirty = false;
        std::vector<int> cols;
        for (const auto& [c, val] : e.rows[t])
          if (c != (int)t) cols.push_back(c);
        for (int c : cols) {
          Int val = e.entry((int)t, c);
          if (val == 0) continue;
          Int q = balanced_quotient(val, e.entry((int)t, (int)t));
          e.col_addmul(c, (int)t, -q);
          if (e.entry((int)t, c) != 0) {
            e.col_swap((int)t, c);
            swapped = true;
            row_dirty = true;
            break;
          }
        }
      }
      if (swapped) continue;  // clearing the row dirtied the column (or vice versa)

      // Pivot now alone in its row and column.  Enforce divisibility into the
      // remaining submatrix: fold an offending row in and keep reducing.
      const Int p = e.entry((int)t, (int)t);
      int bad_row = -1;
      for (std::size_t r = t + 1; r < n && bad_row < 0; ++r)
        for (const auto& [c, val] : e.rows[r]) {
          if ((std::size_t)c < t) continue;
          if (val % p != 0) {
            bad_row = (int)r;
            break;
          }
        }
      if (bad_row < 0) break;
      e.row_addmul((int)t, bad_row, 1);
    }

    if (e.entry((int)t, (int)t) < 0) e.row_negate((int)t);
    ++t;
  }

  SnfResult out;
  out.rank = t;
  out.invariant_factors.reserve(t);
  for (std::size_t k = 0; k < t; ++k) out.invariant_factors.push_back(e.entry((int)k, (int)k));
  out.with_transforms = with_transforms;
  if (with_transforms) {
    out.u = std::move(e.u);
    out.v = std::move(e.v);
    out.u_inv = std::move(e.u_inv);
    out.v_inv = std::move(e.v_inv);
    out.det_sign_u = e.det_u;
    out.det_sign_v = e.det_v;
  }
  return out;
}

}  // namespace minorhom
