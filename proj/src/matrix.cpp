#include "arrgr/matrix.hpp"

#include <utility>

#include "arrgr/error.hpp"

namespace arrgr {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> v) {
  if (a.cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
  RatVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(lead_row, j) != 0) m(r, j) -= f * m(lead_row, j);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

RankKernel rank_and_kernel(const RatMatrix& m) {
  RatMatrix r = m;
  const auto pivots = row_reduce(r);
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  // One basis vector per free column f: x_f = 1, x_pivot = -r(row, f). The
  // free column is the first nonzero entry only if no pivot precedes it with a
  // nonzero coefficient, so normalize afterwards.
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    for (const auto& x : v) {
      if (x != 0) {
        const Rational lead = x;
        for (auto& y : v) y /= lead;
        break;
      }
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix r = m;
  return row_reduce(r).size();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

void EchelonBasis::reduce(RatVector& v) const {
  if (v.size() != dim_) throw InputError("vector dimension mismatch");
  for (const auto& [pivot, row] : rows_) {
    if (v[pivot] == 0) continue;
    const Rational f = v[pivot];
    for (std::size_t j = pivot; j < dim_; ++j) {
      if (row[j] != 0) v[j] -= f * row[j];
    }
  }
}

bool EchelonBasis::insert(RatVector v) {
  if (full()) return false;
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const Rational inv = 1 / v[pivot];
  for (std::size_t j = pivot; j < dim_; ++j) v[j] *= inv;
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool EchelonBasis::contains(RatVector v) const {
  reduce(v);
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

}  // namespace arrgr
