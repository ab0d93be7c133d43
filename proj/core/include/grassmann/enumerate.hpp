#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grassmann/limits.hpp"
#include "grassmann/subspace.hpp"

namespace grassmann {

/// Number of k-dimensional subspaces of F_q^n, or nullopt past 2^63.
std::optional<std::uint64_t> gaussian_count(std::uint64_t q, int n, int k);

/// Every k-dimensional subspace of F_q^n exactly once, in canonical order.
/// Throws kResourceBound ("enumeration too large") past `max_count`.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n, int k,
                                          std::uint64_t max_count = Limits{}.max_enumeration);

/// All k-dimensional S with lower <= S <= upper, canonical order.
std::vector<Subspace> subspaces_between(const Subspace& lower, const Subspace& upper, int k,
                                        std::uint64_t max_count = Limits{}.max_enumeration);

}  // namespace grassmann
