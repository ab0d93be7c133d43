#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassmann/fixture.hpp"
#include "grassmann/graph.hpp"
#include "grassmann/qbinomial.hpp"
#include "grassmann/search.hpp"

namespace grassmann {

struct Bounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;

  bool exact() const { return lower == upper; }
};

/// omega from the clique-number formula.
std::uint64_t omega_formula(std::uint64_t q, int n, int m);

struct OmegaResult {
  std::uint64_t value = 0;
  std::vector<VertexId> witness;  // a maximum clique, sorted
};

/// Maximum clique by branch and bound. Throws kResourceBound past the
/// brute-force bound or node budget, and kInternal if the result disagrees
/// with the clique-number formula.
OmegaResult omega_exact(const GrassmannGraph& g, const Limits& limits = {});

struct AlphaResult {
  Bounds bounds;
  std::vector<VertexId> witness;  // largest independent set found
};

/// Maximum independent set as a maximum clique of the complement. Past the
/// brute-force bound or node budget it returns bounds: the best set found
/// below, and min(search bound, floor(|V| / omega)) above.
AlphaResult alpha_exact(const GrassmannGraph& g, const Limits& limits = {});

struct ChiOptions {
  std::optional<Colouring> known_colouring;
  std::optional<OmegaResult> omega;
  std::optional<Bounds> alpha;
};

struct ChiResult {
  Bounds bounds;
  Colouring colouring;  // realizes bounds.upper
  std::string source;   // "supplied" or "dsatur"
};

/// Lower bound max(omega, ceil(|V| / alpha_upper)); upper bound from a
/// supplied colouring or the DSATUR search seeded with a maximum clique.
ChiResult chi_exact(const GrassmannGraph& g, const Limits& limits = {}, ChiOptions options = {});

struct Endomorphism {
  std::vector<VertexId> map;
};

enum class EndomorphismKind { kAutomorphism, kColouring, kOther };

const char* to_string(EndomorphismKind kind);

/// Throws kInvalidInput ("not an endomorphism ...") naming the first edge
/// whose image is not an edge.
void validate_endomorphism(const GrassmannGraph& g, const Endomorphism& e);

/// automorphism: bijective and adjacency-preserving both ways; colouring:
/// image is a clique of size omega; anything else is reported as other.
EndomorphismKind classify_endomorphism(const GrassmannGraph& g, const Endomorphism& e);

Endomorphism identity_endomorphism(const GrassmannGraph& g);

/// Sends every vertex of colour i to the clique vertex that has colour i.
/// Requires a proper colouring with exactly clique.size() colours.
Endomorphism build_colouring_endomorphism(const GrassmannGraph& g, const Colouring& colouring,
                                          const std::vector<VertexId>& clique);

enum class Verdict { kCore, kNotCore, kUndetermined };

const char* to_string(Verdict v);

struct CorenessReport {
  std::uint64_t q = 0;
  int n = 0;
  int m = 0;
  BigInt vertices = 0;
  std::uint64_t omega = 0;  // formula value
  bool omega_verified = false;  // branch and bound agreed
  std::optional<Bounds> alpha;
  std::optional<Bounds> chi;
  std::optional<Fraction> integrality;  // |V| / omega
  Verdict verdict = Verdict::kUndetermined;
  std::vector<std::string> evidence;
  std::optional<Endomorphism> witness;
  std::optional<EndomorphismKind> witness_kind;
  std::optional<FixtureReport> fixture;
};

/// Decision cascade: non-integral |V|/omega -> core; within bounds, a
/// colouring with omega colours -> not a core (witness attached); chi lower
/// bound above omega -> core; otherwise undetermined.
/// Requires q a prime power and 4 <= 2m <= n, except m = 1 (complete graph).
CorenessReport core_test(int n, int m, std::uint64_t q, const Limits& limits = {},
                         const Fixture* fixture = nullptr);

}  // namespace grassmann
