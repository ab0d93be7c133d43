#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "grassmann/cliques.hpp"
#include "grassmann/coreness.hpp"
#include "grassmann/graph.hpp"
#include "grassmann/qbinomial.hpp"

namespace grassmann {

// Insertion-ordered so that repeated runs produce byte-identical output.
using Json = nlohmann::ordered_json;

/// {"q", "n", "m", "field": {"p", "e", "modulus"}}
Json params_to_json(const FieldSpec& field, int n, int m);

/// {"params", "vertices": [{"id", "matrix": [row strings]}], "edges": [[a, b], ...]}
Json graph_to_json(const GrassmannGraph& g);

/// Rebuilds a graph from graph_to_json output. Vertices are recanonicalized
/// and must already be in canonical order; edges come from the document.
GrassmannGraph graph_from_json(const Json& doc);

/// Undirected DOT; vertices are "v<id>" with the matrix as tooltip.
std::string graph_to_dot(const GrassmannGraph& g);
std::string graph_to_text(const GrassmannGraph& g);

Json census_to_json(const GrassmannGraph& g, const CliqueCensus& census);
Json lemmas_to_json(const LemmaReport& report);
Json dual_to_json(const DualReport& report);
Json coreness_to_json(const CorenessReport& report);
Json h_report_to_json(const HReport& report);
Json scan_to_json(const ScanReport& report);

/// Cyclotomic exponent table, expanded polynomial, optional value at q and,
/// when 4 <= 2m <= n, the h(q) report.
Json qbinom_to_json(int n, int m, std::optional<std::uint64_t> at_q);

std::string render_matrix(const Subspace& s);

}  // namespace grassmann
