#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grassmann/field.hpp"

namespace grassmann {

/// Dense matrix over F_q, row-major. Rows are vectors of F_q^cols; zero rows
/// are allowed (rows == 0 represents the zero subspace).
class FqMatrix {
 public:
  FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Elem>& entries() const noexcept { return data_; }

  void append_row(std::span<const Elem> values);
  FqMatrix transposed() const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

FqMatrix identity_matrix(const FieldPtr& field, std::size_t n);

/// Vertical concatenation. Throws on column or field mismatch.
FqMatrix vstack(const FqMatrix& top, const FqMatrix& bottom);

/// Matrix product a * b.
FqMatrix multiply(const FqMatrix& a, const FqMatrix& b);

struct RrefResult {
  FqMatrix reduced;  // zero rows removed
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row echelon form: unit pivots, zeros above and below each
/// pivot, strictly increasing pivot columns, zero rows dropped.
RrefResult rref(const FqMatrix& m);

std::size_t rank(const FqMatrix& m);

/// rank of [x; y], i.e. dim(row(x) + row(y)).
std::size_t stack_rank(const FqMatrix& x, const FqMatrix& y);

/// Basis (in RREF) of {v : m v^t = 0}.
FqMatrix null_space(const FqMatrix& m);

}  // namespace grassmann
