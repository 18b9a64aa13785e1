#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "arrgr/rational.hpp"

namespace arrgr {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, std::span<const Rational> v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// Basis of the null space; each vector's first nonzero entry is 1.
  std::vector<RatVector> kernel_basis;
};

/// Reduced row-echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> row_reduce(RatMatrix& m);

RankKernel rank_and_kernel(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Incrementally maintained echelon basis of a subspace of Q^dim. Used for
/// rank computations over many generated vectors where most turn out to be
/// redundant.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Adds v to the span. Returns true if the rank grew.
  bool insert(RatVector v);
  /// True when v lies in the current span.
  bool contains(RatVector v) const;
  /// Reduces v against the basis in place (result is zero iff v in span).
  void reduce(RatVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  bool full() const { return rows_.size() == dim_; }
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t dim_;
  // Pivot column -> row that is zero before the pivot and 1 at it.
  std::map<std::size_t, RatVector> rows_;
};

}  // namespace arrgr
