#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassmann/graph.hpp"

namespace grassmann {

enum class CliqueKind { kStar, kTop };

const char* to_string(CliqueKind kind);

/// A star [P>_m (all vertices containing the (m-1)-dimensional center) or a
/// top <Q]_m (all vertices inside the (m+1)-dimensional center).
struct MaximalClique {
  CliqueKind kind;
  Subspace center;
  VertexSet members;
};

/// |[P>_m| = (q^(n-m+1) - 1)/(q - 1) and |<Q]_m| = (q^(m+1) - 1)/(q - 1).
std::uint64_t star_size(std::uint64_t q, int n, int m);
std::uint64_t top_size(std::uint64_t q, int m);

MaximalClique star(const GrassmannGraph& g, const Subspace& center);
MaximalClique top(const GrassmannGraph& g, const Subspace& center);

/// One entry per (m-1)- resp. (m+1)-dimensional subspace, canonical order.
std::vector<MaximalClique> star_catalog(const GrassmannGraph& g, const Limits& limits = {});
std::vector<MaximalClique> top_catalog(const GrassmannGraph& g, const Limits& limits = {});

struct CliqueCensus {
  struct Entry {
    VertexSet members;
    std::optional<CliqueKind> kind;       // nullopt: matches no star or top
    std::optional<std::size_t> catalog_index;
  };
  std::vector<Entry> cliques;  // sorted by member set
  std::size_t stars = 0;
  std::size_t tops = 0;
  std::size_t unmatched = 0;
  std::size_t star_catalog_size = 0;
  std::size_t top_catalog_size = 0;

  /// Every maximal clique is a star or a top.
  bool chow_holds() const { return unmatched == 0; }
};

/// Every maximal clique by Bron-Kerbosch, each matched against the star/top
/// catalog. Requires |V| <= limits.brute_force_vertices.
CliqueCensus all_maximal_cliques_bruteforce(const GrassmannGraph& g, const Limits& limits = {});

struct Counterexample {
  std::string check;
  std::vector<std::string> centers;  // digit-row renderings of the centers
  std::string detail;
};

/// Exhaustive pairwise checks over the star and top catalogs:
///  - star_top_incidence: a star and a top meet iff P <= Q, and then in
///    exactly q + 1 vertices;
///  - distinct_overlap: two distinct stars (or tops) share at most one vertex;
///  - star_meet: distinct stars [A>, [B> meet iff dim(A n B) = m - 2, and
///    then the meet is {A v B};
///  - top_meet: distinct tops <P], <Q] meet iff dim(P n Q) = m, and then the
///    meet is {P n Q}.
struct LemmaReport {
  bool star_top_incidence = true;
  bool distinct_overlap = true;
  bool star_meet = true;
  bool top_meet = true;
  std::uint64_t q_plus_one = 0;
  std::uint64_t incident_pairs = 0;
  std::uint64_t star_top_pairs = 0;
  std::uint64_t star_pairs = 0;
  std::uint64_t top_pairs = 0;
  std::vector<Counterexample> counterexamples;  // capped, deterministic order

  bool all_pass() const { return star_top_incidence && distinct_overlap && star_meet && top_meet; }
};

LemmaReport verify_clique_lemmas(const GrassmannGraph& g, const Limits& limits = {});

/// W -> W^perp on J_q(2m, m).
struct DualReport {
  std::vector<VertexId> map;
  bool bijective = false;
  bool involution = false;
  bool preserves_adjacency = false;
  bool reflects_adjacency = false;
  bool stars_to_tops = false;  // [P>_m maps onto <P^perp]_m
  bool tops_to_stars = false;  // <Q]_m maps onto [Q^perp>_m

  bool all_pass() const {
    return bijective && involution && preserves_adjacency && reflects_adjacency &&
           stars_to_tops && tops_to_stars;
  }
};

/// Throws kInvalidInput ("duality requires n = 2m") unless n = 2m.
DualReport dual_map_check(const GrassmannGraph& g, const Limits& limits = {});

}  // namespace grassmann
