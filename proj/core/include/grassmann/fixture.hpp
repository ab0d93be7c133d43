#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grassmann/graph.hpp"
#include "grassmann/search.hpp"

namespace grassmann {

/// A labeled list of matrices plus a labeled grouping of them into colour
/// classes, as read from a plain-text fixture file:
///
///     # comment
///     A1
///     1000
///     0100
///
///     L1: A1 A10 A12 A15 A17
///
/// Matrix rows are digit strings of packed field elements.
struct Fixture {
  struct Matrix {
    std::string label;
    std::vector<std::string> rows;
  };
  struct Class {
    std::string label;
    std::vector<std::string> members;
  };
  std::vector<Matrix> matrices;
  std::vector<Class> classes;
};

Fixture parse_fixture(std::string_view text);
Fixture load_fixture(const std::filesystem::path& path);

FqMatrix fixture_matrix(const FieldPtr& field, const Fixture::Matrix& m);

struct FixtureViolation {
  std::string kind;  // "duplicate", "not-a-vertex", "coverage", "partition", "independence"
  std::vector<std::string> labels;
  std::string detail;
};

struct FixtureReport {
  bool distinct = false;     // labels canonicalize to pairwise distinct vertices
  bool exhaustive = false;   // ... covering every vertex of the graph
  bool partition = false;    // classes partition the labels
  bool independent = false;  // no class contains an edge
  std::size_t class_count = 0;
  std::vector<std::size_t> class_sizes;
  std::map<std::string, VertexId> vertex_of;
  Colouring colouring;  // by vertex id; filled only when every check passes
  std::vector<FixtureViolation> violations;

  bool all_pass() const { return distinct && exhaustive && partition && independent; }
};

FixtureReport verify_fixture_partition(const GrassmannGraph& g, const Fixture& fixture);

}  // namespace grassmann
