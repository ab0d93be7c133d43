#include "grassmann/matrix.hpp"

#include <string>
#include <utility>

#include "grassmann/error.hpp"

namespace grassmann {
namespace {

void require_compatible(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.cols()) {
    throw_invalid("dimension mismatch: " + std::to_string(a.cols()) + " vs " +
                  std::to_string(b.cols()) + " columns");
  }
  if (!(*a.field() == *b.field())) throw_invalid("field mismatch");
}

// In-place Gauss-Jordan; returns pivot columns. Rows past the rank are zero.
std::vector<std::size_t> eliminate(FqMatrix& m) {
  const Field& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t found = lead_row;
    while (found < m.rows() && m.at(found, col) == 0) ++found;
    if (found == m.rows()) continue;
    if (found != lead_row) {
      auto a = m.row(found);
      auto b = m.row(lead_row);
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(a[c], b[c]);
    }
    auto pivot_row = m.row(lead_row);
    const Elem scale = f.inv(pivot_row[col]);
    if (scale != Field::one()) {
      for (std::size_t c = col; c < m.cols(); ++c) pivot_row[c] = f.mul(pivot_row[c], scale);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row) continue;
      auto target = m.row(r);
      const Elem factor = target[col];
      if (factor == 0) continue;
      const Elem minus = f.neg(factor);
      for (std::size_t c = col; c < m.cols(); ++c) {
        target[c] = f.add(target[c], f.mul(minus, pivot_row[c]));
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : FqMatrix(std::move(field), rows, cols, std::vector<Elem>(rows * cols, 0)) {}

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (!field_) throw_invalid("matrix needs a field");
  if (cols_ == 0) throw_invalid("matrix needs at least one column");
  if (data_.size() != rows_ * cols_) throw_invalid("entry count does not match shape");
  for (Elem e : data_) {
    if (e >= field_->order()) throw_invalid("matrix entry outside the field");
  }
}

void FqMatrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw_invalid("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

FqMatrix FqMatrix::transposed() const {
  if (rows_ == 0) throw_invalid("cannot transpose a matrix with no rows");
  FqMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

bool operator==(const FqMatrix& a, const FqMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.field_ == *b.field_ && a.data_ == b.data_;
}

FqMatrix identity_matrix(const FieldPtr& field, std::size_t n) {
  FqMatrix id(field, n, n);
  for (std::size_t i = 0; i < n; ++i) id.at(i, i) = Field::one();
  return id;
}

FqMatrix vstack(const FqMatrix& top, const FqMatrix& bottom) {
  require_compatible(top, bottom);
  std::vector<Elem> data = top.entries();
  data.insert(data.end(), bottom.entries().begin(), bottom.entries().end());
  return FqMatrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(data));
}

FqMatrix multiply(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) throw_invalid("dimension mismatch in product");
  if (!(*a.field() == *b.field())) throw_invalid("field mismatch");
  const Field& f = *a.field();
  FqMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
      }
    }
  }
  return out;
}

RrefResult rref(const FqMatrix& m) {
  FqMatrix work = m;
  std::vector<std::size_t> pivots = eliminate(work);
  const std::size_t r = pivots.size();
  std::vector<Elem> kept(work.entries().begin(),
                         work.entries().begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  return RrefResult{FqMatrix(m.field(), r, m.cols(), std::move(kept)), r, std::move(pivots)};
}

std::size_t rank(const FqMatrix& m) {
  FqMatrix work = m;
  return eliminate(work).size();
}

std::size_t stack_rank(const FqMatrix& x, const FqMatrix& y) { return rank(vstack(x, y)); }

FqMatrix null_space(const FqMatrix& m) {
  const Field& f = *m.field();
  RrefResult red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

  FqMatrix basis(m.field(), 0, n);
  std::vector<Elem> v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = Field::one();
    for (std::size_t i = 0; i < red.rank; ++i) {
      v[red.pivot_cols[i]] = f.neg(red.reduced.at(i, free));
    }
    basis.append_row(v);
  }
  return rref(basis).reduced;
}

}  // namespace grassmann
