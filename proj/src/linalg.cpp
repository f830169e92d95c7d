#include "gll/linalg.hpp"

#include "gll/error.hpp"

namespace gll::linalg {

MatrixGF::MatrixGF(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

MatrixGF MatrixGF::from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixGF m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field->from_int(rows[r][c]);
  }
  return m;
}

MatrixGF MatrixGF::identity(Field field, std::size_t n) {
  MatrixGF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

void MatrixGF::push_row(std::span<const FieldElem> values) {
  if (values.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

RrefResult rref(const MatrixGF& m) {
  const auto& k = *m.field();
  MatrixGF a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a.at(pivot, c).code == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
    const FieldElem inv = k.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = k.mul(a.at(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const FieldElem factor = a.at(i, c);
      if (factor.code == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = k.sub(a.at(i, j), k.mul(factor, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

bool in_row_space(const MatrixGF& m, std::span<const FieldElem> v) {
  if (v.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  MatrixGF augmented = m;
  augmented.push_row(v);
  return rank(augmented) == rank(m);
}

RowSpace::RowSpace(Field field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), row_of_pivot_(dim, -1) {}

std::size_t RowSpace::reduce(std::vector<FieldElem>& v) const {
  if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "vector length");
  const auto& k = *field_;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c].code == 0) continue;
    const std::ptrdiff_t r = row_of_pivot_[c];
    if (r < 0) return c;
    const auto& row = basis_[static_cast<std::size_t>(r)];
    const FieldElem factor = v[c];
    for (std::size_t j = c; j < dim_; ++j)
      if (row[j].code != 0) v[j] = k.sub(v[j], k.mul(factor, row[j]));
  }
  return dim_;
}

bool RowSpace::insert(std::vector<FieldElem> v) {
  const std::size_t lead = reduce(v);
  if (lead == dim_) return false;
  const auto& k = *field_;
  const FieldElem inv = k.inv(v[lead]);
  for (std::size_t j = lead; j < dim_; ++j) v[j] = k.mul(v[j], inv);
  row_of_pivot_[lead] = static_cast<std::ptrdiff_t>(basis_.size());
  pivot_of_row_.push_back(lead);
  basis_.push_back(std::move(v));
  return true;
}

bool RowSpace::contains(std::vector<FieldElem> v) const { return reduce(v) == dim_; }

}  // namespace gll::linalg
