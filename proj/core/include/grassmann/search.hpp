#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "grassmann/bitset.hpp"

namespace grassmann {

using Adjacency = std::vector<VertexSet>;

Adjacency complement_graph(const Adjacency& adjacency);

bool is_clique(const Adjacency& adjacency, std::span<const VertexId> vertices);
bool is_independent(const Adjacency& adjacency, std::span<const VertexId> vertices);

struct CliqueSearchResult {
  std::vector<VertexId> best;  // sorted
  std::size_t upper_bound = 0;  // == best.size() when exact
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// Maximum clique by branch and bound with greedy-colouring bounds over
/// bitsets. Stops early at `stop_at` (a known upper bound). When the node
/// budget runs out the result carries the best clique found and the root
/// colouring bound.
CliqueSearchResult maximum_clique(const Adjacency& adjacency, std::uint64_t node_budget,
                                  std::size_t stop_at = SIZE_MAX);

/// Pivoting Bron-Kerbosch over a degeneracy ordering. Each maximal clique is
/// reported once.
void for_each_maximal_clique(const Adjacency& adjacency,
                             const std::function<void(const VertexSet&)>& report);

using Colouring = std::vector<int>;  // colour per vertex, 0-based

bool is_proper_colouring(const Adjacency& adjacency, const Colouring& colours);
int colour_count(const Colouring& colours);

struct ColouringSearchResult {
  Colouring best;
  int colours = 0;
  bool optimal = false;  // best.colours == lower bound, or the tree was exhausted
  std::uint64_t nodes = 0;
};

/// Exact DSATUR branch and bound. `seed_clique` vertices are pinned to
/// colours 0..k-1; `lower_bound` ends the search as soon as it is met;
/// `initial` (if proper) is the incumbent.
ColouringSearchResult dsatur_colouring(const Adjacency& adjacency,
                                       std::span<const VertexId> seed_clique, int lower_bound,
                                       std::uint64_t node_budget, const Colouring* initial = nullptr);

}  // namespace grassmann
