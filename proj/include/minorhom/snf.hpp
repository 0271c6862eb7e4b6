#pragma once

#include <map>
#include <vector>

#include "minorhom/error.hpp"
#include "minorhom/numeric.hpp"

namespace minorhom {

// Sparse integer matrix, row-major.  Zero entries are never stored.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int at(std::size_t r, std::size_t c) const {
    auto it = data_[r].find((int)c);
    return it == data_[r].end() ? Int(0) : it->second;
  }
  void set(std::size_t r, std::size_t c, const Int& v) {
    if (v == 0)
      data_[r].erase((int)c);
    else
      data_[r][(int)c] = v;
  }
  void add_to(std::size_t r, std::size_t c, const Int& delta) {
    auto it = data_[r].find((int)c);
    if (it == data_[r].end()) {
      if (delta != 0) data_[r][(int)c] = delta;
    } else {
      it->second += delta;
      if (it->second == 0) data_[r].erase(it);
    }
  }
  const std::map<int, Int>& row(std::size_t r) const { return data_[r]; }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }
  bool is_zero() const { return nonzero_count() == 0; }

  static SparseIntMatrix identity(std::size_t n) {
    SparseIntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  SparseIntMatrix transposed() const;
  std::vector<std::vector<Int>> to_dense() const;
  static SparseIntMatrix from_dense(const std::vector<std::vector<Int>>& d);

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::map<int, Int>> data_;
};

// Result of Smith normal form: U * A * V = diag(invariant_factors) with U, V
// unimodular when transforms are requested.  The factors are positive and each
// divides the next.
struct SnfResult {
  std::vector<Int> invariant_factors;
  std::size_t rank = 0;
  bool with_transforms = false;
  std::vector<std::vector<Int>> u, v, u_inv, v_inv;
  int det_sign_u = 1;  // tracked determinant of U (always +-1)
  int det_sign_v = 1;
};

SnfResult smith_normal_form(const SparseIntMatrix& a, bool with_transforms = false);

// Dense exact helpers (small matrices; tests and transform checks).
std::vector<std::vector<Int>> dense_mul(const std::vector<std::vector<Int>>& a,
                                        const std::vector<std::vector<Int>>& b);
Int dense_determinant(std::vector<std::vector<Int>> a);  // Bareiss, fraction-free

}  // namespace minorhom
