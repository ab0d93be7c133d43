#include <gtest/gtest.h>

#include <random>

#include "grassmann/enumerate.hpp"
#include "grassmann/error.hpp"
#include "grassmann/matrix.hpp"
#include "grassmann/subspace.hpp"
#include "test_support.hpp"

namespace grassmann {
namespace {

using testing::dim_of_span;
using testing::field_of_order;
using testing::matrix_from_digits;
using testing::matrix_from_rows;
using testing::minor_rank;
using testing::span_of;

FqMatrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
  std::vector<Elem> entries(rows * cols);
  for (auto& e : entries) e = pick(rng);
  return FqMatrix(f, rows, cols, std::move(entries));
}

TEST(Rref, SpecExamples) {
  const FieldPtr f2 = field_of_order(2);
  const FqMatrix id = identity_matrix(f2, 2);
  const RrefResult r = rref(id);
  EXPECT_EQ(r.reduced, id);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));

  const RrefResult ones = rref(matrix_from_rows(f2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(ones.reduced, matrix_from_rows(f2, {{1, 1}}));
  EXPECT_EQ(ones.rank, 1u);
}

TEST(Rref, RankMatchesMinorOracle) {
  std::mt19937_64 rng(20240611);
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const FieldPtr f = field_of_order(q);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + trial % 4;
      const std::size_t cols = 1 + (trial / 4) % 6;
      const FqMatrix m = random_matrix(f, rows, cols, rng);
      EXPECT_EQ(rank(m), minor_rank(m)) << "q=" << q << " trial " << trial;
    }
  }
  // The spec's random 3x5 over F_3, plus a rank-deficient 4x6.
  const FieldPtr f3 = field_of_order(3);
  const FqMatrix a = random_matrix(f3, 3, 5, rng);
  EXPECT_EQ(rank(a), minor_rank(a));
  const FqMatrix b = matrix_from_rows(f3, {{1, 2, 0, 1, 1, 0}, {2, 1, 0, 2, 2, 0}, {0, 0, 1, 1, 1, 1}, {1, 2, 1, 2, 2, 1}});
  EXPECT_EQ(rank(b), 2u);
  EXPECT_EQ(minor_rank(b), 2u);
}

TEST(Rref, IdempotentAndRrefShaped) {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {2u, 3u, 4u, 9u}) {
    const FieldPtr f = field_of_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      const FqMatrix m = random_matrix(f, 1 + trial % 5, 1 + trial % 7, rng);
      const RrefResult once = rref(m);
      if (once.rank == 0) continue;
      EXPECT_TRUE(is_rref_basis(once.reduced));
      const RrefResult twice = rref(once.reduced);
      EXPECT_EQ(twice.reduced, once.reduced);
      EXPECT_EQ(twice.pivot_cols, once.pivot_cols);
    }
  }
}

TEST(Rref, EqualRowSpacesGiveIdenticalRref) {
  std::mt19937_64 rng(11);
  const FieldPtr f = field_of_order(3);
  for (int trial = 0; trial < 50; ++trial) {
    const FqMatrix m = random_matrix(f, 3, 5, rng);
    // Left-multiply by a random invertible matrix.
    FqMatrix p = random_matrix(f, 3, 3, rng);
    while (rank(p) < 3) p = random_matrix(f, 3, 3, rng);
    const FqMatrix pm = multiply(p, m);
    ASSERT_EQ(span_of(pm), span_of(m));
    EXPECT_EQ(rref(pm).reduced, rref(m).reduced);
  }
}

TEST(StackRank, SpecExamples) {
  const FieldPtr f2 = field_of_order(2);
  const FqMatrix x = matrix_from_digits(f2, {"1000", "0100"});
  EXPECT_EQ(stack_rank(x, x), 2u);
  const FqMatrix a2 = matrix_from_digits(f2, {"1010", "0100"});
  const FqMatrix a17 = matrix_from_digits(f2, {"0010", "0001"});
  EXPECT_EQ(stack_rank(x, a2), 3u);
  EXPECT_EQ(stack_rank(x, a17), 4u);
  EXPECT_THROW(stack_rank(x, identity_matrix(f2, 3)), Error);
}

TEST(NullSpace, KernelOracle) {
  std::mt19937_64 rng(3);
  for (std::uint64_t q : {2u, 3u, 4u}) {
    const FieldPtr f = field_of_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      const FqMatrix m = random_matrix(f, 1 + trial % 3, 2 + trial % 4, rng);
      const FqMatrix ns = null_space(m);
      const std::size_t r = rank(m);
      ASSERT_EQ(ns.rows(), m.cols() - r);
      // Every kernel basis vector is orthogonal to every row.
      for (std::size_t i = 0; i < ns.rows(); ++i) {
        for (std::size_t j = 0; j < m.rows(); ++j) {
          Elem dot = 0;
          for (std::size_t c = 0; c < m.cols(); ++c) dot = f->add(dot, f->mul(ns.at(i, c), m.at(j, c)));
          EXPECT_EQ(dot, 0u);
        }
      }
    }
  }
}

TEST(Subspace, CanonicalizeExamples) {
  const FieldPtr f2 = field_of_order(2);
  const FqMatrix id = identity_matrix(f2, 3);
  EXPECT_EQ(canonicalize(id).basis(), id);

  const FqMatrix x = matrix_from_digits(f2, {"1011", "0110"});
  const FqMatrix p = matrix_from_digits(f2, {"11", "01"});
  EXPECT_EQ(canonicalize(multiply(p, x)), canonicalize(x));
  EXPECT_EQ(canonicalize(x).dim(), 2u);
  EXPECT_EQ(canonicalize(x).ambient(), 4u);
}

TEST(Subspace, JoinAndIntersectExamples) {
  const FieldPtr f2 = field_of_order(2);
  const Subspace s = canonicalize(matrix_from_digits(f2, {"1000", "0110"}));
  EXPECT_EQ(join(s, s), s);
  EXPECT_EQ(intersect(s, s), s);

  const Subspace l1 = canonicalize(matrix_from_digits(f2, {"10"}));
  const Subspace l2 = canonicalize(matrix_from_digits(f2, {"11"}));
  EXPECT_EQ(join(l1, l2), Subspace::full(f2, 2));
  EXPECT_EQ(intersect(l1, l2), Subspace::zero(f2, 2));

  // Two (m-1)-dim subspaces meeting in dimension m-2 join to a unique m-space.
  const Subspace a = canonicalize(matrix_from_digits(f2, {"1000", "0100"}));
  const Subspace b = canonicalize(matrix_from_digits(f2, {"1000", "0010"}));
  const Subspace ab = join(a, b);
  EXPECT_EQ(ab.dim(), 3u);
  int containing = 0;
  for (const Subspace& w : enumerate_subspaces(f2, 4, 3)) containing += (w.contains(a) && w.contains(b)) ? 1 : 0;
  EXPECT_EQ(containing, 1);

  // Adjacent vertices of J_2(4,2) meet in a line.
  const Subspace a1 = canonicalize(matrix_from_digits(f2, {"1000", "0100"}));
  const Subspace a2 = canonicalize(matrix_from_digits(f2, {"1010", "0100"}));
  EXPECT_EQ(intersect(a1, a2).dim(), 1u);
}

class SubspaceLattice : public ::testing::TestWithParam<std::uint64_t> {};

// dim(S v T) + dim(S n T) = dim S + dim T, with join and meet checked
// against spans enumerated vector by vector.
TEST_P(SubspaceLattice, DimensionIdentityExhaustive) {
  const FieldPtr f = field_of_order(GetParam());
  std::vector<Subspace> all;
  for (int k = 0; k <= 4; ++k) {
    auto layer = enumerate_subspaces(f, 4, k);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  std::vector<std::set<std::vector<Elem>>> spans;
  for (const auto& s : all) spans.push_back(span_of(s));

  std::size_t checked = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      const Subspace sj = join(all[i], all[j]);
      const Subspace si = intersect(all[i], all[j]);
      ASSERT_EQ(sj.dim() + si.dim(), all[i].dim() + all[j].dim());
      if (GetParam() == 2 || (i + j) % 7 == 0) {
        std::set<std::vector<Elem>> meet;
        std::set_intersection(spans[i].begin(), spans[i].end(), spans[j].begin(), spans[j].end(),
                              std::inserter(meet, meet.end()));
        ASSERT_EQ(span_of(si), meet);
        ASSERT_EQ(si.dim(), dim_of_span(meet.size(), f->order()));
        ASSERT_TRUE(sj.contains(all[i]) && sj.contains(all[j]));
      }
      ++checked;
    }
  }
  EXPECT_EQ(checked, all.size() * (all.size() + 1) / 2);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, SubspaceLattice, ::testing::Values(2u, 3u),
                         [](const auto& info) { return "q" + std::to_string(info.param); });

TEST(DualComplement, Examples) {
  const FieldPtr f2 = field_of_order(2);
  EXPECT_EQ(dual_complement(Subspace::full(f2, 4)), Subspace::zero(f2, 4));
  EXPECT_EQ(dual_complement(Subspace::zero(f2, 4)), Subspace::full(f2, 4));
  for (const Subspace& w : enumerate_subspaces(f2, 4, 2)) EXPECT_EQ(dual_complement(dual_complement(w)), w);
}

TEST(DualComplement, DimensionAndContainmentReversal) {
  const FieldPtr f2 = field_of_order(2);
  std::vector<Subspace> all;
  for (int k = 0; k <= 4; ++k) {
    auto layer = enumerate_subspaces(f2, 4, k);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  std::vector<Subspace> duals;
  for (const auto& s : all) {
    duals.push_back(dual_complement(s));
    EXPECT_EQ(duals.back().dim(), 4 - s.dim());
    EXPECT_EQ(duals.back().dim(), 4 - rank(s.basis()));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      ASSERT_EQ(all[j].contains(all[i]), duals[i].contains(duals[j])) << i << "," << j;
    }
  }
}

TEST(Subspace, CanonicalOrderIsTotal) {
  const FieldPtr f3 = field_of_order(3);
  auto subs = enumerate_subspaces(f3, 3, 1);
  for (std::size_t i = 0; i + 1 < subs.size(); ++i) EXPECT_LT(subs[i], subs[i + 1]);
  EXPECT_EQ(subs.front().digit_rows(), (std::vector<std::string>{"100"}));
}

}  // namespace
}  // namespace grassmann
