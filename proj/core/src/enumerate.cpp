#include "grassmann/enumerate.hpp"

#include <algorithm>
#include <string>

#include "grassmann/error.hpp"

namespace grassmann {
namespace {

constexpr unsigned __int128 kCountCap = (static_cast<unsigned __int128>(1) << 63);

std::optional<std::uint64_t> q_power_minus_one(std::uint64_t q, int k) {
  unsigned __int128 v = 1;
  for (int i = 0; i < k; ++i) {
    v *= q;
    if (v > kCountCap) return std::nullopt;
  }
  return static_cast<std::uint64_t>(v - 1);
}

void check_bound(std::uint64_t q, int n, int k, std::uint64_t max_count) {
  auto count = gaussian_count(q, n, k);
  if (!count || *count > max_count) {
    throw_bound("enumeration too large: [" + std::to_string(n) + " choose " + std::to_string(k) +
                "]_" + std::to_string(q) +
                (count ? " = " + std::to_string(*count) : std::string(" overflows")) +
                " exceeds bound " + std::to_string(max_count));
  }
}

// Calls emit(pivots) for every k-subset of {0..n-1} in lexicographic order.
template <typename Emit>
void for_each_combination(int n, int k, Emit&& emit) {
  std::vector<std::size_t> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  while (true) {
    emit(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<std::size_t>(n - k + i)) --i;
    if (i < 0) return;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// Odometer step over element ranks, last slot fastest. False once wrapped.
bool advance(std::vector<std::uint32_t>& ranks, std::uint32_t q) {
  for (std::size_t s = ranks.size(); s-- > 0;) {
    if (++ranks[s] < q) return true;
    ranks[s] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::uint64_t> gaussian_count(std::uint64_t q, int n, int k) {
  if (k < 0 || k > n || q < 2) return std::uint64_t{0};
  if (k > n - k) k = n - k;
  unsigned __int128 value = 1;
  for (int i = 1; i <= k; ++i) {
    auto num = q_power_minus_one(q, n + 1 - i);
    auto den = q_power_minus_one(q, i);
    if (!num || !den) return std::nullopt;
    // value * num stays below 2^126 while both factors are below 2^63.
    value = value * *num;
    value /= *den;  // exact: the running value is [n choose i]_q
    if (value > kCountCap) return std::nullopt;
  }
  return static_cast<std::uint64_t>(value);
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n, int k,
                                          std::uint64_t max_count) {
  if (n < 1 || k < 0 || k > n) throw_invalid("need 0 <= k <= n and n >= 1");
  const std::uint64_t q = field->order();
  check_bound(q, n, k, max_count);
  const auto cols = static_cast<std::size_t>(n);
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(*gaussian_count(q, n, k)));
  if (k == 0) {
    out.push_back(Subspace::zero(field, cols));
    return out;
  }
  const auto rows = static_cast<std::size_t>(k);
  for_each_combination(n, k, [&](const std::vector<std::size_t>& pivots) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    // free positions, row-major
    std::vector<std::size_t> free_slots;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = pivots[r] + 1; c < cols; ++c) {
        if (!is_pivot[c]) free_slots.push_back(r * cols + c);
      }
    }
    std::vector<Elem> base(rows * cols, 0);
    for (std::size_t r = 0; r < rows; ++r) base[r * cols + pivots[r]] = Field::one();
    std::vector<std::uint32_t> ranks(free_slots.size(), 0);
    do {
      std::vector<Elem> entries = base;
      for (std::size_t s = 0; s < free_slots.size(); ++s) {
        entries[free_slots[s]] = field->element_at_rank(ranks[s]);
      }
      out.push_back(Subspace::from_matrix(FqMatrix(field, rows, cols, std::move(entries))));
    } while (advance(ranks, static_cast<std::uint32_t>(q)));
  });
  return out;
}

std::vector<Subspace> subspaces_between(const Subspace& lower, const Subspace& upper, int k,
                                        std::uint64_t max_count) {
  if (!upper.contains(lower)) throw_invalid("lower subspace is not contained in upper");
  const int l = static_cast<int>(lower.dim());
  const int u = static_cast<int>(upper.dim());
  if (k < l || k > u) throw_invalid("k must lie between dim(lower) and dim(upper)");
  const FieldPtr& field = lower.field();
  check_bound(field->order(), u - l, k - l, max_count);

  // Extend the basis of lower to one of upper. The extra rows span a
  // complement C of lower in upper, and k-subspaces between the two are
  // lower + D for the (k-l)-subspaces D of C.
  FqMatrix complement(field, 0, upper.ambient());
  Subspace spanned = lower;
  for (std::size_t r = 0; r < upper.dim(); ++r) {
    auto row = upper.basis().row(r);
    if (spanned.contains(row)) continue;
    complement.append_row(row);
    FqMatrix next = spanned.basis();
    next.append_row(row);
    spanned = Subspace::from_matrix(next);
  }

  std::vector<Subspace> out;
  if (u == l) {
    out.push_back(lower);
    return out;
  }
  for (const Subspace& coords : enumerate_subspaces(field, u - l, k - l, max_count)) {
    FqMatrix gens = lower.basis();
    if (coords.dim() > 0) {
      FqMatrix lifted = multiply(coords.basis(), complement);
      for (std::size_t r = 0; r < lifted.rows(); ++r) gens.append_row(lifted.row(r));
    }
    out.push_back(Subspace::from_matrix(gens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grassmann
