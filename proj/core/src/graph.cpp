#include "grassmann/graph.hpp"

#include <algorithm>
#include <string>

#include "grassmann/enumerate.hpp"
#include "grassmann/error.hpp"
#include "parallel.hpp"

namespace grassmann {

GrassmannGraph build_graph(const FieldPtr& field, int n, int m, const Limits& limits) {
  if (m < 1 || m >= n) throw_invalid("need 1 <= m < n");
  if (field->order() > limits.max_graph_field_order) {
    throw_bound("field too large for graph building: q = " + std::to_string(field->order()));
  }
  std::vector<Subspace> vertices =
      enumerate_subspaces(field, n, m, std::min(limits.max_enumeration, limits.max_vertices));

  const std::size_t count = vertices.size();
  const auto target = static_cast<std::size_t>(m - 1);
  Adjacency adjacency(count, VertexSet(count));
  // Each worker fills the upper triangle of its rows; mirrored afterwards.
  detail::parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        if (intersect(vertices[i], vertices[j]).dim() == target) adjacency[i].set(j);
      }
    }
  });
  for (std::size_t i = 0; i < count; ++i) {
    for (VertexId j = adjacency[i].next(i + 1); j < count; j = adjacency[i].next(j + 1)) {
      adjacency[j].set(i);
    }
  }
  return GrassmannGraph(field, n, m, std::move(vertices), std::move(adjacency));
}

GrassmannGraph GrassmannGraph::from_parts(FieldPtr field, int n, int m,
                                          std::vector<Subspace> vertices, Adjacency adjacency) {
  if (m < 1 || m >= n) throw_invalid("need 1 <= m < n");
  if (adjacency.size() != vertices.size()) throw_invalid("adjacency size mismatch");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Subspace& v = vertices[i];
    if (v.dim() != static_cast<std::size_t>(m) || v.ambient() != static_cast<std::size_t>(n) ||
        !(*v.field() == *field)) {
      throw_invalid("vertex " + std::to_string(i) + " is not an m-subspace of F_q^n");
    }
    if (i > 0 && !(vertices[i - 1] < v)) throw_invalid("vertices are not in canonical order");
    if (adjacency[i].universe() != vertices.size()) throw_invalid("adjacency row size mismatch");
    if (adjacency[i].test(i)) throw_invalid("adjacency has a loop at " + std::to_string(i));
  }
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (VertexId j : adjacency[i].members()) {
      if (!adjacency[j].test(i)) throw_invalid("adjacency is not symmetric");
    }
  }
  return GrassmannGraph(std::move(field), n, m, std::move(vertices), std::move(adjacency));
}

std::size_t GrassmannGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

std::optional<VertexId> GrassmannGraph::find(const Subspace& s) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
  if (it == vertices_.end() || !(*it == s)) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

VertexId GrassmannGraph::id_of(const Subspace& s) const {
  auto id = find(s);
  if (!id) throw_invalid("subspace is not a vertex of the graph");
  return *id;
}

int distance(const GrassmannGraph& g, VertexId x, VertexId y) {
  return g.m() - static_cast<int>(intersect(g.vertex(x), g.vertex(y)).dim());
}

bool is_regular(const GrassmannGraph& g) {
  if (g.size() == 0) return true;
  const std::size_t d = g.degree(0);
  for (VertexId v = 1; v < g.size(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

}  // namespace grassmann
