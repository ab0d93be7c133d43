#include <gtest/gtest.h>

#include <set>

#include "grassmann/cliques.hpp"
#include "grassmann/enumerate.hpp"
#include "grassmann/error.hpp"
#include "grassmann/search.hpp"
#include "test_support.hpp"

namespace grassmann {
namespace {

using testing::field_of_order;
using testing::matrix_from_digits;
using testing::naive_clique_number;

Adjacency cycle(std::size_t n) {
  Adjacency adj(n, VertexSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    adj[i].set((i + 1) % n);
    adj[(i + 1) % n].set(i);
  }
  return adj;
}

Adjacency complete(std::size_t n) {
  Adjacency adj(n, VertexSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    adj[i].set_all();
    adj[i].reset(i);
  }
  return adj;
}

TEST(Search, SmallGraphs) {
  const Adjacency c5 = cycle(5);
  EXPECT_EQ(maximum_clique(c5, 1000).best.size(), 2u);
  EXPECT_EQ(maximum_clique(complement_graph(c5), 1000).best.size(), 2u);
  const auto col = dsatur_colouring(c5, std::vector<VertexId>{0, 1}, 2, 1000);
  EXPECT_EQ(col.colours, 3);
  EXPECT_TRUE(col.optimal);
  EXPECT_TRUE(is_proper_colouring(c5, col.best));

  const Adjacency k6 = complete(6);
  const auto kc = dsatur_colouring(k6, std::vector<VertexId>{0, 1, 2, 3, 4, 5}, 6, 1000);
  EXPECT_EQ(kc.colours, 6);
  EXPECT_EQ(maximum_clique(k6, 1000).best.size(), 6u);

  std::size_t maximal = 0;
  for_each_maximal_clique(c5, [&](const VertexSet& s) {
    EXPECT_EQ(s.count(), 2u);
    ++maximal;
  });
  EXPECT_EQ(maximal, 5u);
}

TEST(Search, SeedMustBeAClique) {
  const Adjacency c5 = cycle(5);
  EXPECT_THROW(dsatur_colouring(c5, std::vector<VertexId>{0, 2}, 2, 100), Error);
}

TEST(Search, ExhaustedBudgetIsReported) {
  const GrassmannGraph g = build_graph(field_of_order(2), 5, 2);
  const CliqueSearchResult r = maximum_clique(complement_graph(g.adjacency()), 5);
  EXPECT_FALSE(r.exact);
  EXPECT_GE(r.upper_bound, r.best.size());
  EXPECT_TRUE(is_independent(g.adjacency(), r.best));
}

TEST(StarTop, Sizes) {
  const FieldPtr f2 = field_of_order(2);
  const GrassmannGraph g = build_graph(f2, 4, 2);
  const Subspace p = canonicalize(matrix_from_digits(f2, {"1000"}));
  const MaximalClique s = star(g, p);
  EXPECT_EQ(s.members.count(), 7u);
  EXPECT_EQ(s.kind, CliqueKind::kStar);
  EXPECT_TRUE(is_clique(g.adjacency(), s.members.members()));
  EXPECT_THROW(top(g, p), Error);

  const GrassmannGraph g5 = build_graph(f2, 5, 2);
  for (const auto& c : star_catalog(g5)) EXPECT_EQ(c.members.count(), 15u);
  for (const auto& c : top_catalog(g5)) EXPECT_EQ(c.members.count(), 7u);

  const GrassmannGraph g3 = build_graph(field_of_order(3), 4, 2);
  for (const auto& c : star_catalog(g3)) EXPECT_EQ(c.members.count(), 13u);
  for (const auto& c : top_catalog(g3)) EXPECT_EQ(c.members.count(), 13u);
}

TEST(StarTop, SizeFormulaOrdering) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    for (int m = 1; m <= 4; ++m) {
      for (int n = 2 * m; n <= 2 * m + 3; ++n) {
        if (n == 2 * m) {
          EXPECT_EQ(star_size(q, n, m), top_size(q, m));
        } else {
          EXPECT_GT(star_size(q, n, m), top_size(q, m));
        }
      }
    }
  }
}

// Oracle: grow every clique vertex by vertex and keep the ones that no
// vertex extends.
TEST(Census, J242) {
  const GrassmannGraph g = build_graph(field_of_order(2), 4, 2);
  const CliqueCensus census = all_maximal_cliques_bruteforce(g);
  EXPECT_EQ(census.cliques.size(), 30u);
  EXPECT_EQ(census.stars, 15u);
  EXPECT_EQ(census.tops, 15u);
  EXPECT_EQ(census.unmatched, 0u);
  EXPECT_TRUE(census.chow_holds());
  for (const auto& c : census.cliques) EXPECT_EQ(c.members.count(), 7u);

  std::set<VertexSet> oracle;
  std::function<void(VertexSet&, VertexId)> grow = [&](VertexSet& cur, VertexId from) {
    bool extendable = false;
    for (VertexId v = 0; v < g.size(); ++v) {
      if (cur.test(v)) continue;
      VertexSet nb = g.neighbours(v);
      if ((nb & cur) == cur) {
        extendable = true;
        if (v >= from) {
          cur.set(v);
          grow(cur, v + 1);
          cur.reset(v);
        }
      }
    }
    if (!extendable) oracle.insert(cur);
  };
  VertexSet start(g.size());
  grow(start, 0);
  std::set<VertexSet> found;
  for (const auto& c : census.cliques) found.insert(c.members);
  EXPECT_EQ(found, oracle);
}

TEST(Census, J252) {
  const GrassmannGraph g = build_graph(field_of_order(2), 5, 2);
  const CliqueCensus census = all_maximal_cliques_bruteforce(g);
  EXPECT_EQ(census.stars, 31u);
  EXPECT_EQ(census.tops, 155u);
  EXPECT_EQ(census.unmatched, 0u);
  EXPECT_EQ(census.cliques.size(), 186u);
  for (const auto& c : census.cliques) {
    ASSERT_TRUE(c.kind.has_value());
    EXPECT_EQ(c.members.count(), *c.kind == CliqueKind::kStar ? 15u : 7u);
  }
}

TEST(Census, CompleteGraphIsOneStar) {
  const GrassmannGraph g = build_graph(field_of_order(3), 3, 1);
  const CliqueCensus census = all_maximal_cliques_bruteforce(g);
  EXPECT_EQ(census.cliques.size(), 1u);
  EXPECT_TRUE(census.chow_holds());
}

TEST(Census, RespectsBruteForceBound) {
  Limits tight;
  tight.brute_force_vertices = 10;
  const GrassmannGraph g = build_graph(field_of_order(2), 4, 2);
  try {
    all_maximal_cliques_bruteforce(g, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kResourceBound);
  }
}

class Lemmas : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(Lemmas, Exhaustive) {
  const auto [q, n, m] = GetParam();
  const GrassmannGraph g = build_graph(field_of_order(static_cast<std::uint64_t>(q)), n, m);
  const LemmaReport r = verify_clique_lemmas(g);
  EXPECT_TRUE(r.all_pass());
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.q_plus_one, static_cast<std::uint64_t>(q) + 1);
  const auto stars = star_catalog(g);
  const auto tops = top_catalog(g);
  EXPECT_EQ(r.star_top_pairs, stars.size() * tops.size());
  EXPECT_EQ(r.star_pairs, stars.size() * (stars.size() - 1) / 2);
  EXPECT_EQ(r.top_pairs, tops.size() * (tops.size() - 1) / 2);

  // Oracle for the incidence lemma: every incident star/top pair meets in
  // exactly q + 1 vertices, every other pair is disjoint.
  std::uint64_t incident = 0;
  for (const auto& s : stars) {
    for (const auto& t : tops) {
      const std::size_t overlap = s.members.intersection_count(t.members);
      if (t.center.contains(s.center)) {
        ++incident;
        ASSERT_EQ(overlap, static_cast<std::size_t>(q) + 1);
      } else {
        ASSERT_EQ(overlap, 0u);
      }
    }
  }
  EXPECT_EQ(r.incident_pairs, incident);
}

INSTANTIATE_TEST_SUITE_P(DeskScale, Lemmas,
                         ::testing::Values(std::make_tuple(2, 4, 2), std::make_tuple(2, 5, 2),
                                           std::make_tuple(3, 4, 2), std::make_tuple(2, 6, 3)),
                         [](const auto& info) {
                           return "J" + std::to_string(std::get<0>(info.param)) + "_" +
                                  std::to_string(std::get<1>(info.param)) + "_" +
                                  std::to_string(std::get<2>(info.param));
                         });

TEST(Dual, J242AndJ263) {
  for (auto [q, n, m] : {std::tuple{2, 4, 2}, std::tuple{2, 6, 3}, std::tuple{3, 4, 2}}) {
    const GrassmannGraph g = build_graph(field_of_order(static_cast<std::uint64_t>(q)), n, m);
    const DualReport r = dual_map_check(g);
    EXPECT_TRUE(r.all_pass()) << q << " " << n << " " << m;
    // Oracle: recompute the map from dual_complement and check both directions on all pairs.
    for (VertexId v = 0; v < g.size(); ++v) {
      ASSERT_EQ(r.map[v], g.id_of(dual_complement(g.vertex(v))));
      ASSERT_EQ(r.map[r.map[v]], v);
    }
    for (VertexId a = 0; a < g.size(); ++a) {
      for (VertexId b = a + 1; b < g.size(); ++b) ASSERT_EQ(g.adjacent(a, b), g.adjacent(r.map[a], r.map[b]));
    }
  }
}

TEST(Dual, RequiresHalfDimension) {
  const GrassmannGraph g = build_graph(field_of_order(2), 5, 2);
  EXPECT_THROW(dual_map_check(g), Error);
}

TEST(Omega, MatchesUnprunedSearch) {
  for (auto [q, n, m] : {std::tuple{2, 4, 2}, std::tuple{3, 4, 2}, std::tuple{2, 4, 1}}) {
    const GrassmannGraph g = build_graph(field_of_order(static_cast<std::uint64_t>(q)), n, m);
    const auto res = maximum_clique(g.adjacency(), 1'000'000);
    EXPECT_TRUE(res.exact);
    EXPECT_EQ(res.best.size(), naive_clique_number(g.adjacency()));
    EXPECT_TRUE(is_clique(g.adjacency(), res.best));
  }
}

}  // namespace
}  // namespace grassmann
