#include "latmark/ci.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace latmark;
using testing_support::load;
using testing_support::random_matrix;

TEST(MixedDominating, SmallMatrices) {
  EXPECT_TRUE(is_mixed_row(make_vector({1, -1, 0})));
  EXPECT_FALSE(is_mixed_row(make_vector({1, 0, 2})));
  EXPECT_TRUE(is_mixed_dominating(make_matrix({{1, -1, 0}, {6, 0, -1}})));
  EXPECT_TRUE(is_mixed_dominating(make_matrix({{1, -1, 0}, {0, 6, -1}})));
  // The 2x2 block on the first two columns has both rows mixed.
  EXPECT_FALSE(is_mixed_dominating(make_matrix({{1, -1, 0}, {-1, 2, -1}})));
  EXPECT_FALSE(is_mixed_dominating(make_matrix({{1, 1, 0}})));
  EXPECT_TRUE(is_mixed_dominating({}));
}

TEST(MixedDominating, AgreesWithExhaustiveSubmatrixScan) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 3, n = 2 + trial % 3;
    const IntMatrix a = random_matrix(rng, m, n, -1, 1);
    bool expected = true;
    for (const auto& row : a) expected = expected && is_mixed(row);
    // Any square row/column selection with every selected row mixed.
    for (std::size_t k = 2; expected && k <= std::min(m, n); ++k) {
      oracle::subsets(m, k, [&](const std::vector<std::size_t>& rs) {
        oracle::subsets(n, k, [&](const std::vector<std::size_t>& cs) {
          bool all = true;
          for (auto r : rs) {
            bool p = false, q = false;
            for (auto c : cs) {
              p = p || a[r][c] > 0;
              q = q || a[r][c] < 0;
            }
            all = all && p && q;
          }
          if (all) expected = false;
        });
      });
    }
    EXPECT_EQ(is_mixed_dominating(a), expected);
  }
}

TEST(CompleteIntersection, SplitFixture) {
  const Lattice l = load("split5.lat");
  const CIReport r = is_binomial_ci(l);
  EXPECT_TRUE(r.is_ci);
  EXPECT_EQ(r.mu_projected, 2u);
  EXPECT_EQ(r.rank_projected, 2u);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(ci_certificate_check(l, *r.certificate));
  EXPECT_TRUE(ci_certificate_check(l, make_matrix({{1, -1, 0}, {6, 0, -1}})));
  EXPECT_FALSE(ci_certificate_check(l, make_matrix({{2, -2, 0}, {6, 0, -1}})));
  EXPECT_FALSE(ci_certificate_check(l, make_matrix({{1, -1, 0}, {7, -1, -1}})));
  EXPECT_THROW(ci_certificate_check(l, make_matrix({{1, -1}, {6, 0}})), Error);

  ASSERT_TRUE(r.block);
  EXPECT_EQ(r.block->column_order, (Support{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.block->m, *r.certificate);
  const Decomposition d = decompose(l);
  // Each row [A | M] is a lattice vector, and C spans the pure part.
  for (std::size_t i = 0; i < r.block->m.size(); ++i) {
    IntVector u = r.block->a[i];
    u.insert(u.end(), r.block->m[i].begin(), r.block->m[i].end());
    EXPECT_TRUE(l.contains(u));
  }
  IntMatrix c;
  for (const auto& row : r.block->c) {
    c.push_back(embed(row, d.sigma, 5));
    for (const auto& x : row) EXPECT_GT(x, 0);
  }
  EXPECT_TRUE(lattices_equal(Lattice::from_generators(c, 5), d.pure));
}

TEST(CompleteIntersection, OtherFixtures) {
  const CIReport m = is_binomial_ci(load("macaulay.lat"));
  EXPECT_FALSE(m.is_ci);
  EXPECT_EQ(m.mu_projected, 4u);
  EXPECT_FALSE(m.certificate);

  const CIReport g = is_binomial_ci(load("graded.lat"));
  EXPECT_TRUE(g.is_ci);
  ASSERT_TRUE(g.certificate);
  EXPECT_TRUE(ci_certificate_check(load("graded.lat"), *g.certificate));

  const CIReport p = is_binomial_ci(load("plane.lat"));
  EXPECT_TRUE(p.is_ci);
  EXPECT_EQ(p.rank_projected, 0u);
}

TEST(CompleteIntersection, CertificatesFoundAreValid) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 2;
    const Lattice l = Lattice::from_generators(random_matrix(rng, 1 + trial % 2, n, -3, 3), n);
    const CIReport r = is_binomial_ci(l);
    EXPECT_EQ(r.is_ci, r.mu_projected == r.rank_projected);
    if (r.certificate) {
      EXPECT_TRUE(ci_certificate_check(l, *r.certificate));
    }
  }
}
