#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "grassmann/limits.hpp"

namespace grassmann {

bool is_prime(std::uint64_t n);

/// Returns (p, e) with q = p^e for a prime p, or nullopt if q is not a prime
/// power.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

/// The field F_q, q = p^e, as Z_p[x] / (modulus).
///
/// `modulus` is monic of degree e, coefficients low degree first. For e = 1
/// it is the placeholder x (coefficients {0, 1}) and arithmetic is plain
/// mod p.
struct FieldSpec {
  std::uint32_t p = 2;
  int e = 1;
  std::vector<std::uint32_t> modulus{0, 1};
  std::uint32_t q = 2;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Builds F_{p^e} with the lexicographically smallest monic irreducible
/// modulus (coefficients compared low degree first).
FieldSpec make_field(std::uint64_t p, int e,
                     std::uint64_t max_order = Limits{}.max_field_order);

/// An element as its coefficient vector (length e, low degree first, each
/// entry in [0, p)). Ordering is lexicographic on that vector.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

FieldElement zero_element(const FieldSpec& spec);
FieldElement one_element(const FieldSpec& spec);
bool is_valid_element(const FieldSpec& spec, const FieldElement& a);

enum class FieldOp { kAdd, kNeg, kMul, kInv };

/// Single entry point over coefficient vectors. `b` is required for add/mul
/// and ignored for neg/inv.
FieldElement field_arithmetic(const FieldSpec& spec, FieldOp op,
                              const FieldElement& a,
                              const std::optional<FieldElement>& b = {});

FieldElement add(const FieldSpec& spec, const FieldElement& a,
                 const FieldElement& b);
FieldElement neg(const FieldSpec& spec, const FieldElement& a);
FieldElement mul(const FieldSpec& spec, const FieldElement& a,
                 const FieldElement& b);
FieldElement inv(const FieldSpec& spec, const FieldElement& a);

/// Packed element: sum of coeffs[i] * p^i. Zero packs to 0, one packs to 1.
using Elem = std::uint32_t;

/// Arithmetic engine over packed elements, used by every matrix routine.
/// Small fields (q <= 256) run off precomputed tables.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t order() const noexcept { return spec_.q; }
  std::uint32_t characteristic() const noexcept { return spec_.p; }

  static constexpr Elem zero() noexcept { return 0; }
  static constexpr Elem one() noexcept { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;

  Elem encode(const FieldElement& a) const;
  FieldElement decode(Elem a) const;

  /// Position of `a` in the lexicographic element order, and its inverse.
  /// Identity maps on prime fields.
  std::uint32_t rank_of(Elem a) const;
  Elem element_at_rank(std::uint32_t r) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec_ == b.spec_;
  }

 private:
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;

  FieldSpec spec_;
  bool tabled_ = false;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field_ptr(const FieldSpec& spec) {
  return std::make_shared<const Field>(spec);
}

}  // namespace grassmann
