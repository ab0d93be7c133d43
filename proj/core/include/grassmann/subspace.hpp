#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "grassmann/matrix.hpp"

namespace grassmann {

/// A subspace of F_q^n held by its unique RREF basis, so equality of
/// subspaces is equality of basis entries.
class Subspace {
 public:
  /// Row space of `m` (any spanning set; rank-deficient input is fine).
  static Subspace from_matrix(const FqMatrix& m);
  static Subspace zero(const FieldPtr& field, std::size_t ambient);
  static Subspace full(const FieldPtr& field, std::size_t ambient);

  const FqMatrix& basis() const noexcept { return basis_; }
  const FieldPtr& field() const noexcept { return basis_.field(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;

  /// Canonical order: dimension, then pivot-column set, then the free
  /// entries read row-major in field element order.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

  /// One string per basis row, entries as base-36 digits of the packed
  /// element (e.g. "1000", "0100").
  std::vector<std::string> digit_rows() const;

 private:
  Subspace(FqMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  FqMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Same as Subspace::from_matrix.
Subspace canonicalize(const FqMatrix& m);

/// S v T: row space of the stacked bases.
Subspace join(const Subspace& s, const Subspace& t);

/// S n T via the left kernel of the stacked bases: every (a | b) with
/// a S + b T = 0 contributes a S to the intersection.
Subspace intersect(const Subspace& s, const Subspace& t);

/// W^perp = {v : w v^t = 0 for all w in W}.
Subspace dual_complement(const Subspace& w);

bool is_rref_basis(const FqMatrix& m);

char digit_char(Elem e);

}  // namespace grassmann
