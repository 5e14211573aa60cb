#include "gorlab/matrix.hpp"

#include <algorithm>

#include "gorlab/errors.hpp"

namespace gorlab {

Matrix::Matrix(std::vector<int> rowDegrees, std::vector<int> colDegrees)
    : rowDeg_(std::move(rowDegrees)), colDeg_(std::move(colDegrees)), cols_(colDeg_.size()) {}

void Matrix::setColumn(std::size_t c, FreeVector v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].row >= rows()) throw MismatchError("row index out of range");
    if (k > 0 && v[k].row <= v[k - 1].row) throw Error("column entries must be sorted by row");
    if (v[k].value.isZero()) throw Error("column entries must be nonzero");
  }
  cols_.at(c) = std::move(v);
}

void Matrix::appendColumn(FreeVector v, int degree) {
  colDeg_.push_back(degree);
  cols_.emplace_back();
  setColumn(cols_.size() - 1, std::move(v));
}

Polynomial Matrix::at(std::size_t r, std::size_t c) const {
  for (const auto& e : cols_.at(c))
    if (e.row == r) return e.value;
  return {};
}

void Matrix::set(std::size_t r, std::size_t c, Polynomial value) {
  if (r >= rows()) throw MismatchError("row index out of range");
  auto& col = cols_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    if (value.isZero()) col.erase(it);
    else it->value = std::move(value);
  } else if (!value.isZero()) {
    col.insert(it, Entry{static_cast<std::uint32_t>(r), std::move(value)});
  }
}

bool Matrix::isZero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

void Matrix::checkHomogeneous() const {
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& e : cols_[c]) {
      int want = colDeg_[c] - rowDeg_[e.row];
      for (const auto& t : e.value.terms())
        if (t.mono.degree() != want)
          throw InhomogeneousError("matrix entry (" + std::to_string(e.row) + ", " +
                                   std::to_string(c) + ") is not homogeneous of degree " +
                                   std::to_string(want));
    }
}

Matrix Matrix::transpose() const {
  std::vector<int> r(colDeg_.size()), c(rowDeg_.size());
  for (std::size_t i = 0; i < colDeg_.size(); ++i) r[i] = -colDeg_[i];
  for (std::size_t i = 0; i < rowDeg_.size(); ++i) c[i] = -rowDeg_[i];
  Matrix t(std::move(r), std::move(c));
  for (std::size_t col = 0; col < cols(); ++col)
    for (const auto& e : cols_[col])
      t.cols_[e.row].push_back(Entry{static_cast<std::uint32_t>(col), e.value});
  return t;
}

Matrix Matrix::identity(const std::vector<int>& degrees, std::size_t nvars) {
  Matrix m(degrees, degrees);
  Polynomial one({Term{Monomial::one(nvars), 1}});
  for (std::size_t i = 0; i < degrees.size(); ++i)
    m.cols_[i].push_back(Entry{static_cast<std::uint32_t>(i), one});
  return m;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
  if (a.rowDeg_ != b.rowDeg_) throw MismatchError("hconcat: row degrees differ");
  Matrix m = a;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    m.colDeg_.push_back(b.colDeg_[c]);
    m.cols_.push_back(b.cols_[c]);
  }
  return m;
}

Matrix Matrix::directSum(const Matrix& a, const Matrix& b) {
  std::vector<int> r = a.rowDeg_, c = a.colDeg_;
  r.insert(r.end(), b.rowDeg_.begin(), b.rowDeg_.end());
  c.insert(c.end(), b.colDeg_.begin(), b.colDeg_.end());
  Matrix m(std::move(r), std::move(c));
  for (std::size_t j = 0; j < a.cols(); ++j) m.cols_[j] = a.cols_[j];
  auto off = static_cast<std::uint32_t>(a.rows());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (const auto& e : b.cols_[j]) m.cols_[a.cols() + j].push_back(Entry{e.row + off, e.value});
  return m;
}

Matrix Matrix::selectColumns(const std::vector<std::size_t>& keep) const {
  std::vector<int> c;
  for (auto k : keep) c.push_back(colDeg_.at(k));
  Matrix m(rowDeg_, std::move(c));
  for (std::size_t j = 0; j < keep.size(); ++j) m.cols_[j] = cols_[keep[j]];
  return m;
}

Matrix Matrix::selectRows(const std::vector<std::size_t>& keep) const {
  std::vector<int> r;
  std::vector<std::int64_t> newIndex(rows(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    r.push_back(rowDeg_.at(keep[i]));
    newIndex[keep[i]] = static_cast<std::int64_t>(i);
  }
  Matrix m(std::move(r), colDeg_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : cols_[j])
      if (newIndex[e.row] >= 0)
        m.cols_[j].push_back(Entry{static_cast<std::uint32_t>(newIndex[e.row]), e.value});
    std::sort(m.cols_[j].begin(), m.cols_[j].end(),
              [](const Entry& x, const Entry& y) { return x.row < y.row; });
  }
  return m;
}

}  // namespace gorlab
