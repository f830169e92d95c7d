#pragma once

// Dense exact linear algebra over GF(q).

#include <cstddef>
#include <span>
#include <vector>

#include "gll/gf.hpp"

namespace gll::linalg {

using gf::Field;
using gf::FieldElem;

class MatrixGF {
 public:
  MatrixGF(Field field, std::size_t rows, std::size_t cols);
  /// Rows given as integer lists reduced into the field.
  static MatrixGF from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows);
  static MatrixGF identity(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElem& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  FieldElem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const FieldElem> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  /// Appends a row; throws DimensionMismatch on length.
  void push_row(std::span<const FieldElem> values);

  friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return gf::same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> entries_;  // row-major
};

struct RrefResult {
  MatrixGF reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination, pivoting on the first nonzero entry.
RrefResult rref(const MatrixGF& m);
std::size_t rank(const MatrixGF& m);

/// v is a GF(q)-combination of the rows of m: rank(m) == rank(m + v).
/// Throws DimensionMismatch.
bool in_row_space(const MatrixGF& m, std::span<const FieldElem> v);

/// Incrementally built echelon basis of a row space. Each stored row is
/// normalised with a leading 1 at its pivot; inserting a vector reduces it
/// against the basis and keeps the remainder when nonzero. Used for the
/// many membership queries against one span that ideal-containment tests
/// need, without re-eliminating per query.
class RowSpace {
 public:
  RowSpace(Field field, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(std::vector<FieldElem> v);
  bool contains(std::vector<FieldElem> v) const;

 private:
  // Reduces v in place; returns the first nonzero column or dim_.
  std::size_t reduce(std::vector<FieldElem>& v) const;

  Field field_;
  std::size_t dim_;
  std::vector<std::vector<FieldElem>> basis_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::ptrdiff_t> row_of_pivot_;  // -1 when no basis row pivots there
};

}  // namespace gll::linalg
