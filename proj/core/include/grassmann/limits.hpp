#pragma once

#include <cstddef>
#include <cstdint>

namespace grassmann {

/// Size bounds for every exhaustive operation. These are configuration, so a
/// caller with a bigger machine can raise them.
struct Limits {
  std::uint64_t max_field_order = std::uint64_t{1} << 20;
  std::uint64_t max_graph_field_order = 16;
  std::uint64_t max_enumeration = 1'000'000;
  std::uint64_t max_vertices = 20'000;
  std::uint64_t brute_force_vertices = 2'000;
  /// Node budget for each exact branch-and-bound search (clique, colouring).
  std::uint64_t search_nodes = 2'000'000;
};

/// Worker count for parallel loops: hardware concurrency, capped by the
/// GRASSMANN_LAB_THREADS environment variable when it is set.
std::size_t worker_count();

}  // namespace grassmann
