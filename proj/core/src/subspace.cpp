#include "grassmann/subspace.hpp"

#include "grassmann/error.hpp"

namespace grassmann {
namespace {

void require_same_space(const Subspace& s, const Subspace& t) {
  if (s.ambient() != t.ambient()) throw_invalid("ambient dimension mismatch");
  if (!(*s.field() == *t.field())) throw_invalid("field mismatch");
}

}  // namespace

char digit_char(Elem e) {
  constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (e >= 36) throw_invalid("element too large for a digit rendering");
  return kDigits[e];
}

Subspace Subspace::from_matrix(const FqMatrix& m) {
  RrefResult r = rref(m);
  return Subspace(std::move(r.reduced), std::move(r.pivot_cols));
}

Subspace Subspace::zero(const FieldPtr& field, std::size_t ambient) {
  return Subspace(FqMatrix(field, 0, ambient), {});
}

Subspace Subspace::full(const FieldPtr& field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(identity_matrix(field, ambient), std::move(pivots));
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient()) throw_invalid("vector length mismatch");
  // Reduce v against the RREF basis; v is in the span iff it reduces to 0.
  const Field& f = *field();
  std::vector<Elem> rest(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem coeff = rest[pivots_[i]];
    if (coeff == 0) continue;
    const Elem minus = f.neg(coeff);
    auto row = basis_.row(i);
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] = f.add(rest[c], f.mul(minus, row[c]));
  }
  for (Elem e : rest) {
    if (e != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  require_same_space(*this, other);
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis().row(i))) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  // Same pivots: non-free entries agree, so comparing every entry row-major
  // compares the free entries.
  const Field& f = *a.field();
  const auto& x = a.basis_.entries();
  const auto& y = b.basis_.entries();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return f.rank_of(x[i]) <=> f.rank_of(y[i]);
  }
  return std::strong_ordering::equal;
}

std::vector<std::string> Subspace::digit_rows() const {
  std::vector<std::string> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    std::string s;
    for (Elem e : basis_.row(r)) s.push_back(digit_char(e));
    out.push_back(std::move(s));
  }
  return out;
}

Subspace canonicalize(const FqMatrix& m) { return Subspace::from_matrix(m); }

Subspace join(const Subspace& s, const Subspace& t) {
  require_same_space(s, t);
  return Subspace::from_matrix(vstack(s.basis(), t.basis()));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  require_same_space(s, t);
  if (s.dim() == 0 || t.dim() == 0) return Subspace::zero(s.field(), s.ambient());
  const FqMatrix stacked = vstack(s.basis(), t.basis());
  const FqMatrix kernel = null_space(stacked.transposed());
  if (kernel.rows() == 0) return Subspace::zero(s.field(), s.ambient());
  FqMatrix left(s.field(), kernel.rows(), s.dim());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    for (std::size_t c = 0; c < s.dim(); ++c) left.at(r, c) = kernel.at(r, c);
  }
  return Subspace::from_matrix(multiply(left, s.basis()));
}

Subspace dual_complement(const Subspace& w) {
  if (w.dim() == 0) return Subspace::full(w.field(), w.ambient());
  return Subspace::from_matrix(null_space(w.basis()));
}

bool is_rref_basis(const FqMatrix& m) {
  std::size_t prev_pivot = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t pivot = 0;
    while (pivot < m.cols() && m.at(r, pivot) == 0) ++pivot;
    if (pivot == m.cols()) return false;  // zero row
    if (m.at(r, pivot) != Field::one()) return false;
    if (r > 0 && pivot <= prev_pivot) return false;
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other != r && m.at(other, pivot) != 0) return false;
    }
    prev_pivot = pivot;
  }
  return true;
}

}  // namespace grassmann
