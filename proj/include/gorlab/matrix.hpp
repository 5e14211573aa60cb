#pragma once

#include <cstdint>
#include <vector>

#include "gorlab/poly_ring.hpp"

namespace gorlab {

struct Entry {
  std::uint32_t row = 0;
  Polynomial value;

  bool operator==(const Entry& o) const { return row == o.row && value == o.value; }
};

// Element of a twisted free module (+)_j S(-a_j): nonzero entries sorted by
// component. The twists live with the Matrix (or module) that owns it.
using FreeVector = std::vector<Entry>;

// Homogeneous matrix mapping (+)_c S(-b_c) -> (+)_r S(-a_r), stored by
// column. Entry (r, c) is zero or homogeneous of degree b_c - a_r.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::vector<int> rowDegrees, std::vector<int> colDegrees);

  std::size_t rows() const { return rowDeg_.size(); }
  std::size_t cols() const { return colDeg_.size(); }
  const std::vector<int>& rowDegrees() const { return rowDeg_; }
  const std::vector<int>& colDegrees() const { return colDeg_; }

  const FreeVector& column(std::size_t c) const { return cols_[c]; }
  const std::vector<FreeVector>& columns() const { return cols_; }
  // Entries must be sorted by row and nonzero.
  void setColumn(std::size_t c, FreeVector v);
  // Appends a column of the given source degree.
  void appendColumn(FreeVector v, int degree);

  Polynomial at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Polynomial value);

  bool isZero() const;
  bool operator==(const Matrix& o) const {
    return rowDeg_ == o.rowDeg_ && colDeg_ == o.colDeg_ && cols_ == o.cols_;
  }

  // Throws InhomogeneousError unless every entry has degree b_c - a_r.
  void checkHomogeneous() const;

  Matrix transpose() const;  // degrees negated: S(b) -> S(a) dualized
  static Matrix identity(const std::vector<int>& degrees, std::size_t nvars);
  // [A | B] with equal row degrees.
  static Matrix hconcat(const Matrix& a, const Matrix& b);
  // Block diagonal.
  static Matrix directSum(const Matrix& a, const Matrix& b);
  // Columns listed in `keep`.
  Matrix selectColumns(const std::vector<std::size_t>& keep) const;
  Matrix selectRows(const std::vector<std::size_t>& keep) const;

 private:
  std::vector<int> rowDeg_;
  std::vector<int> colDeg_;
  std::vector<FreeVector> cols_;
};

}  // namespace gorlab
