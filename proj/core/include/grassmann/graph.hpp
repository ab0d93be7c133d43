#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grassmann/bitset.hpp"
#include "grassmann/limits.hpp"
#include "grassmann/subspace.hpp"

namespace grassmann {

using Adjacency = std::vector<VertexSet>;

/// J_q(n, m): vertices are the m-dimensional subspaces of F_q^n in canonical
/// order, X ~ Y iff dim(X n Y) = m - 1. Immutable after construction.
class GrassmannGraph {
 public:
  /// Reassembles a graph from a vertex list and adjacency, e.g. after a JSON
  /// reload. Vertices must be sorted, distinct, m-dimensional subspaces of
  /// F_q^n; adjacency must be symmetric and irreflexive.
  static GrassmannGraph from_parts(FieldPtr field, int n, int m, std::vector<Subspace> vertices,
                                   Adjacency adjacency);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_->order(); }
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Subspace>& vertices() const noexcept { return vertices_; }
  const Subspace& vertex(VertexId id) const { return vertices_.at(id); }

  const Adjacency& adjacency() const noexcept { return adjacency_; }
  const VertexSet& neighbours(VertexId id) const { return adjacency_.at(id); }
  bool adjacent(VertexId a, VertexId b) const { return adjacency_.at(a).test(b); }
  std::size_t degree(VertexId id) const { return adjacency_.at(id).count(); }
  std::size_t edge_count() const;

  /// Vertex id of an m-dimensional subspace (binary search on the canonical
  /// order), or nullopt if it is not a vertex of this graph.
  std::optional<VertexId> find(const Subspace& s) const;
  VertexId id_of(const Subspace& s) const;

 private:
  GrassmannGraph(FieldPtr field, int n, int m, std::vector<Subspace> vertices, Adjacency adjacency)
      : field_(std::move(field)), n_(n), m_(m), vertices_(std::move(vertices)),
        adjacency_(std::move(adjacency)) {}

  friend GrassmannGraph build_graph(const FieldPtr&, int, int, const Limits&);

  FieldPtr field_;
  int n_;
  int m_;
  std::vector<Subspace> vertices_;
  Adjacency adjacency_;
};

/// Requires 1 <= m < n, q within the graph field bound and the vertex count
/// within `limits.max_vertices`.
GrassmannGraph build_graph(const FieldPtr& field, int n, int m, const Limits& limits = {});

/// m - dim(X n Y).
int distance(const GrassmannGraph& g, VertexId x, VertexId y);

bool is_regular(const GrassmannGraph& g);

}  // namespace grassmann
