#include "grassmann/coreness.hpp"

#include <algorithm>
#include <set>

#include "grassmann/cliques.hpp"
#include "grassmann/enumerate.hpp"
#include "grassmann/error.hpp"

namespace grassmann {
namespace {

bool within_brute_force(const GrassmannGraph& g, const Limits& limits) {
  return g.size() <= limits.brute_force_vertices;
}

std::vector<VertexId> greedy_independent_set(const Adjacency& adj) {
  std::vector<VertexId> chosen;
  VertexSet blocked(adj.size());
  for (VertexId v = 0; v < adj.size(); ++v) {
    if (blocked.test(v)) continue;
    chosen.push_back(v);
    blocked |= adj[v];
  }
  return chosen;
}

// The star of the first (m-1)-subspace when stars are maximum, else the top
// of the first (m+1)-subspace.
std::vector<VertexId> canonical_maximum_clique(const GrassmannGraph& g, const Limits& limits) {
  if (g.n() >= 2 * g.m()) {
    return star(g, enumerate_subspaces(g.field(), g.n(), g.m() - 1, limits.max_enumeration).front()).members.members();
  }
  return top(g, enumerate_subspaces(g.field(), g.n(), g.m() + 1, limits.max_enumeration).front()).members.members();
}

}  // namespace

std::uint64_t omega_formula(std::uint64_t q, int n, int m) {
  return n >= 2 * m ? star_size(q, n, m) : top_size(q, m);
}

OmegaResult omega_exact(const GrassmannGraph& g, const Limits& limits) {
  if (!within_brute_force(g, limits)) {
    throw_bound("graph has " + std::to_string(g.size()) + " vertices, brute-force bound is " +
                std::to_string(limits.brute_force_vertices));
  }
  CliqueSearchResult res = maximum_clique(g.adjacency(), limits.search_nodes);
  if (!res.exact) throw_bound("maximum clique search exceeded the node budget");
  const std::uint64_t formula = omega_formula(g.q(), g.n(), g.m());
  if (res.best.size() != formula) {
    throw_internal("clique number " + std::to_string(res.best.size()) +
                   " disagrees with the formula value " + std::to_string(formula));
  }
  return OmegaResult{res.best.size(), std::move(res.best)};
}

AlphaResult alpha_exact(const GrassmannGraph& g, const Limits& limits) {
  // Vertex-transitive graphs satisfy alpha * omega <= |V|.
  const std::uint64_t transitive_bound = g.size() / omega_formula(g.q(), g.n(), g.m());
  if (!within_brute_force(g, limits)) {
    std::vector<VertexId> found = greedy_independent_set(g.adjacency());
    return AlphaResult{Bounds{found.size(), transitive_bound}, std::move(found)};
  }
  CliqueSearchResult res = maximum_clique(complement_graph(g.adjacency()), limits.search_nodes);
  Bounds bounds{res.best.size(), std::min<std::uint64_t>(res.upper_bound, transitive_bound)};
  bounds.upper = std::max(bounds.upper, bounds.lower);
  return AlphaResult{bounds, std::move(res.best)};
}

ChiResult chi_exact(const GrassmannGraph& g, const Limits& limits, ChiOptions options) {
  if (!options.omega) options.omega = omega_exact(g, limits);
  if (!options.alpha) options.alpha = alpha_exact(g, limits).bounds;
  const std::uint64_t omega = options.omega->value;
  const std::uint64_t alpha_upper = std::max<std::uint64_t>(options.alpha->upper, 1);
  const std::uint64_t ratio_bound = (g.size() + alpha_upper - 1) / alpha_upper;

  ChiResult result;
  result.bounds.lower = std::max(omega, ratio_bound);

  if (options.known_colouring) {
    if (!is_proper_colouring(g.adjacency(), *options.known_colouring)) {
      throw_invalid("supplied colouring is not proper");
    }
    result.colouring = *options.known_colouring;
    result.bounds.upper = static_cast<std::uint64_t>(colour_count(result.colouring));
    result.source = "supplied";
  }
  if (!options.known_colouring || result.bounds.upper > result.bounds.lower) {
    const std::uint64_t budget = within_brute_force(g, limits) ? limits.search_nodes : 0;
    ColouringSearchResult search =
        dsatur_colouring(g.adjacency(), options.omega->witness, static_cast<int>(result.bounds.lower),
                         budget, options.known_colouring ? &*options.known_colouring : nullptr);
    if (result.colouring.empty() || static_cast<std::uint64_t>(search.colours) < result.bounds.upper) {
      result.colouring = std::move(search.best);
      result.bounds.upper = static_cast<std::uint64_t>(search.colours);
      result.source = "dsatur";
    }
    if (search.optimal) result.bounds.lower = result.bounds.upper;
  }
  return result;
}

const char* to_string(EndomorphismKind kind) {
  switch (kind) {
    case EndomorphismKind::kAutomorphism:
      return "automorphism";
    case EndomorphismKind::kColouring:
      return "colouring";
    case EndomorphismKind::kOther:
      return "other";
  }
  return "other";
}

void validate_endomorphism(const GrassmannGraph& g, const Endomorphism& e) {
  if (e.map.size() != g.size()) throw_invalid("not an endomorphism: map size does not match the graph");
  for (VertexId v : e.map) {
    if (v >= g.size()) throw_invalid("not an endomorphism: image outside the vertex set");
  }
  for (VertexId a = 0; a < g.size(); ++a) {
    const VertexSet& nb = g.neighbours(a);
    for (VertexId b = nb.next(a + 1); b < g.size(); b = nb.next(b + 1)) {
      if (!g.adjacent(e.map[a], e.map[b])) {
        throw_invalid("not an endomorphism: edge (" + std::to_string(a) + ", " + std::to_string(b) +
                      ") maps to non-edge (" + std::to_string(e.map[a]) + ", " +
                      std::to_string(e.map[b]) + ")");
      }
    }
  }
}

EndomorphismKind classify_endomorphism(const GrassmannGraph& g, const Endomorphism& e) {
  validate_endomorphism(g, e);
  VertexSet image(g.size());
  for (VertexId v : e.map) image.set(v);
  if (image.count() == g.size()) {
    for (VertexId a = 0; a < g.size(); ++a) {
      for (VertexId b = a + 1; b < g.size(); ++b) {
        if (!g.adjacent(a, b) && g.adjacent(e.map[a], e.map[b])) return EndomorphismKind::kOther;
      }
    }
    return EndomorphismKind::kAutomorphism;
  }
  const std::vector<VertexId> members = image.members();
  if (members.size() == omega_formula(g.q(), g.n(), g.m()) && is_clique(g.adjacency(), members)) {
    return EndomorphismKind::kColouring;
  }
  return EndomorphismKind::kOther;
}

Endomorphism identity_endomorphism(const GrassmannGraph& g) {
  Endomorphism e;
  e.map.resize(g.size());
  for (VertexId v = 0; v < g.size(); ++v) e.map[v] = v;
  return e;
}

Endomorphism build_colouring_endomorphism(const GrassmannGraph& g, const Colouring& colouring,
                                          const std::vector<VertexId>& clique) {
  if (!is_proper_colouring(g.adjacency(), colouring)) throw_invalid("improper colouring");
  if (!is_clique(g.adjacency(), clique)) throw_invalid("clique vertices are not pairwise adjacent");
  const int k = static_cast<int>(clique.size());
  if (colour_count(colouring) != k) {
    throw_invalid("colouring uses " + std::to_string(colour_count(colouring)) + " colours, clique has " +
                  std::to_string(k) + " vertices");
  }
  std::vector<VertexId> target(static_cast<std::size_t>(k), g.size());
  for (VertexId v : clique) target[static_cast<std::size_t>(colouring[v])] = v;
  Endomorphism e;
  e.map.resize(g.size());
  for (VertexId v = 0; v < g.size(); ++v) e.map[v] = target[static_cast<std::size_t>(colouring[v])];
  return e;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kCore:
      return "core";
    case Verdict::kNotCore:
      return "not-core";
    case Verdict::kUndetermined:
      return "undetermined";
  }
  return "undetermined";
}

CorenessReport core_test(int n, int m, std::uint64_t q, const Limits& limits, const Fixture* fixture) {
  const auto pp = prime_power(q);
  if (!pp) throw_invalid("q is not a prime power: " + std::to_string(q));
  CorenessReport report;
  report.q = q;
  report.n = n;
  report.m = m;

  if (m == 1) {
    if (n < 2) throw_invalid("need n > m");
    report.vertices = gaussian_binomial_value(n, 1, BigInt(q));
    report.omega = static_cast<std::uint64_t>(report.vertices);
    report.verdict = Verdict::kCore;
    report.evidence.push_back("J_q(n,1) is a complete graph, hence a core");
    return report;
  }
  if (!(4 <= 2 * m && 2 * m <= n)) throw_invalid("need 4 <= 2m <= n");

  report.vertices = gaussian_binomial_value(n, m, BigInt(q));
  report.omega = omega_formula(q, n, m);
  report.integrality = h_integrality(n, m, q);
  if (!report.integrality->is_integer()) {
    report.verdict = Verdict::kCore;
    report.evidence.push_back("|V|/omega = " + report.integrality->str() +
                              " is not an integer, so chi > omega and the graph is a core");
    return report;
  }
  report.evidence.push_back("|V|/omega = " + report.integrality->str() + " is an integer; integrality test is silent");

  if (q > limits.max_graph_field_order || report.vertices > limits.brute_force_vertices) {
    report.evidence.push_back("graph exceeds the brute-force bound; chi not searched");
    return report;
  }

  const GrassmannGraph g = build_graph(make_field_ptr(make_field(pp->first, pp->second)), n, m, limits);
  OmegaResult omega = omega_exact(g, limits);
  report.omega_verified = true;
  report.evidence.push_back("branch and bound confirms omega = " + std::to_string(omega.value));

  ChiOptions options;
  options.omega = omega;
  if (fixture) {
    report.fixture = verify_fixture_partition(g, *fixture);
    if (report.fixture->all_pass()) {
      options.known_colouring = report.fixture->colouring;
      report.evidence.push_back("fixture partition verified: " + std::to_string(report.fixture->class_count) +
                                " independent sets cover V");
    } else {
      report.evidence.push_back("fixture partition failed verification and was ignored");
    }
  }
  AlphaResult alpha = alpha_exact(g, limits);
  report.alpha = alpha.bounds;
  options.alpha = alpha.bounds;
  ChiResult chi = chi_exact(g, limits, options);
  report.chi = chi.bounds;

  if (chi.bounds.upper == omega.value) {
    Endomorphism witness = build_colouring_endomorphism(g, chi.colouring, canonical_maximum_clique(g, limits));
    report.witness_kind = classify_endomorphism(g, witness);
    report.witness = std::move(witness);
    report.verdict = Verdict::kNotCore;
    report.evidence.push_back("a proper " + std::to_string(omega.value) + "-colouring (" + chi.source +
                              ") gives chi = omega; it folds the graph onto a maximum clique");
    report.evidence.push_back(std::string("witness endomorphism classifies as ") + to_string(*report.witness_kind) +
                              ", consistent with every endomorphism being an automorphism or a colouring");
  } else if (chi.bounds.lower > omega.value) {
    report.verdict = Verdict::kCore;
    report.evidence.push_back("chi >= " + std::to_string(chi.bounds.lower) + " > omega");
  } else {
    report.evidence.push_back("chi in [" + std::to_string(chi.bounds.lower) + ", " +
                              std::to_string(chi.bounds.upper) + "]; search budget exhausted");
  }
  return report;
}

}  // namespace grassmann
