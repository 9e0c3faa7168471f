#include "latmark/decomposition.hpp"
#include "latmark/graded.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace latmark;
using testing_support::binomial;
using testing_support::load;
using testing_support::random_matrix;
using testing_support::to_mat;

TEST(Decomposition, SplitLatticeInFiveVariables) {
  const Lattice l = load("split5.lat");
  const Decomposition d = decompose(l);
  EXPECT_EQ(d.sigma, (Support{0, 1}));
  EXPECT_EQ(d.complement, (Support{2, 3, 4}));
  EXPECT_EQ(d.pure.rank(), 2u);
  EXPECT_EQ(d.projected.rank(), 2u);
  EXPECT_TRUE(lattices_equal(d.pure, Lattice::from_generators(make_matrix({{1, 1, 0, 0, 0}, {5, 0, 0, 0, 0}}), 5)));
  EXPECT_EQ(d.hilbert, (std::vector<IntVector>{make_vector({0, 5, 0, 0, 0}), make_vector({1, 1, 0, 0, 0}),
                                               make_vector({5, 0, 0, 0, 0})}));
  EXPECT_EQ(*d.quotient.quotient_size(), 5);
  ASSERT_TRUE(d.witness);
  EXPECT_TRUE(is_nonnegative(*d.witness));
  EXPECT_EQ(support(*d.witness), d.sigma);
  EXPECT_TRUE(l.contains(*d.witness));
  EXPECT_TRUE(lattices_equal(d.projected, Lattice::from_generators(make_matrix({{1, -1, 0}, {6, 0, -1}}), 3)));
}

TEST(Decomposition, FreeFunctionsAgreeWithDecompose) {
  const Lattice l = load("split5.lat");
  const Decomposition d = decompose(l);
  EXPECT_EQ(support_sigma(l), d.sigma);
  EXPECT_EQ(hilbert_basis_positive(l), d.hilbert);
  EXPECT_EQ(pure_sublattice(l, d.sigma), d.pure);
  EXPECT_EQ(projected_lattice(l, d.sigma), d.projected);
  EXPECT_EQ(pure_witness(l), *d.witness);
}

TEST(Decomposition, PositivelyGradedLatticeHasEmptySigma) {
  const Decomposition d = decompose(load("macaulay.lat"));
  EXPECT_TRUE(d.sigma.empty());
  EXPECT_EQ(d.pure.rank(), 0u);
  EXPECT_FALSE(d.witness);
  EXPECT_TRUE(d.hilbert.empty());
  EXPECT_THROW(pure_witness(load("macaulay.lat")), Error);
}

TEST(Decomposition, ZeroLattice) {
  const Decomposition d = decompose(load("empty.lat"));
  EXPECT_EQ(d.n, 3u);
  EXPECT_TRUE(d.sigma.empty());
  EXPECT_EQ(d.projected.rank(), 0u);
  EXPECT_EQ(d.projected.ambient_dim(), 3u);
}

TEST(Decomposition, RandomStructuralInvariants) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4, m = 1 + trial % 3;
    const Lattice l = Lattice::from_generators(random_matrix(rng, m, n, -3, 3), n);
    const Decomposition d = decompose(l);
    EXPECT_EQ(l.rank(), d.pure.rank() + d.projected.rank());
    EXPECT_TRUE(is_positively_graded(d.projected));
    for (const auto& row : d.pure.basis()) {
      EXPECT_TRUE(l.contains(row));
      EXPECT_TRUE(is_zero(restrict_to(row, d.complement)));
    }
    for (const auto& h : d.hilbert) {
      EXPECT_TRUE(l.contains(h));
      EXPECT_TRUE(is_nonnegative(h));
    }
    // Every coordinate used by a boxed nonnegative element lies in sigma.
    std::vector<bool> seen(n, false);
    const oracle::Membership in(to_mat(l.basis()));
    oracle::box(n, 0, 3, [&](const oracle::Vec& v) {
      if (oracle::is_zero(v) || !in(v)) return;
      for (std::size_t i = 0; i < n; ++i) seen[i] = seen[i] || v[i] > 0;
    });
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) {
        EXPECT_TRUE(std::count(d.sigma.begin(), d.sigma.end(), i)) << i;
      }
    }
    if (d.witness) {
      EXPECT_EQ(support(*d.witness), d.sigma);
      EXPECT_TRUE(l.contains(*d.witness));
    }
  }
}

TEST(PureMarkov, GeneratesTheIdealOfThePurePart) {
  const Decomposition d = decompose(load("split5.lat"));
  const auto basis = pure_markov_basis(d.pure, d.sigma);
  EXPECT_EQ(basis.size(), 2u);
  EXPECT_TRUE(verify_pure_markov(d.pure, basis));

  const std::vector<Binomial> expected{binomial({5, 0, 0, 0, 0}, {0, 0, 0, 0, 0}),
                                       binomial({1, 1, 0, 0, 0}, {0, 0, 0, 0, 0})};
  EXPECT_TRUE(verify_pure_markov(d.pure, expected));
  EXPECT_TRUE(generates_pure(d.pure, expected));
}

TEST(PureMarkov, RejectsIndexTwoSublatticeAndOffSupportTerms) {
  const Decomposition d = decompose(load("split5.lat"));
  EXPECT_FALSE(generates_pure(d.pure, std::vector<Binomial>{binomial({5, 0, 0, 0, 0}, {0, 0, 0, 0, 0}),
                                                            binomial({2, 2, 0, 0, 0}, {0, 0, 0, 0, 0})}));
  EXPECT_FALSE(generates_pure(d.pure, std::vector<Binomial>{binomial({5, 0, 0, 0, 0}, {0, 0, 0, 0, 0}),
                                                            binomial({1, 1, 1, 0, 0}, {0, 0, 1, 0, 0})}));
  EXPECT_FALSE(verify_pure_markov(d.pure, std::vector<Binomial>{binomial({1, 1, 0, 0, 0}, {0, 0, 0, 0, 0}),
                                                                binomial({5, 0, 0, 0, 0}, {0, 0, 0, 0, 0}),
                                                                binomial({0, 5, 0, 0, 0}, {0, 0, 0, 0, 0})}));
}

TEST(PureMarkov, ChainRequiresATermOverPreviouslyReachedVariables) {
  const Lattice pure = Lattice::from_generators(make_matrix({{1, 1}, {0, 2}}), 2);
  EXPECT_TRUE(generates_pure(pure, std::vector<Binomial>{binomial({1, 1}, {0, 0}), binomial({2, 0}, {0, 0})}));
  EXPECT_FALSE(generates_pure(pure, std::vector<Binomial>{binomial({2, 2}, {1, 1}), binomial({0, 3}, {0, 1})}));
}

TEST(PureMarkov, PositiveBasis) {
  const Lattice pure = Lattice::from_generators(make_matrix({{1, 1, 0}, {5, 0, 0}}), 3);
  const Support sigma{0, 1};
  const IntMatrix b = pure_positive_basis(pure, sigma, make_vector({1, 1, 0}));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], make_vector({1, 1, 0}));
  for (const auto& row : b) {
    for (std::size_t j : sigma) EXPECT_GE(row[j], 1);
  }
  EXPECT_TRUE(lattices_equal(Lattice::from_generators(b, 3), pure));
  EXPECT_THROW(pure_positive_basis(pure, sigma, make_vector({5, 0, 0})), Error);
}

TEST(PureMarkov, RandomPureLatticesVerify) {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Lattice l = Lattice::from_generators(random_matrix(rng, 1 + trial % 3, n, -3, 3), n);
    const Decomposition d = decompose(l);
    if (d.pure.rank() == 0) continue;
    ++checked;
    const auto basis = pure_markov_basis(d.pure, d.sigma);
    EXPECT_TRUE(verify_pure_markov(d.pure, basis));
    for (const auto& b : basis) EXPECT_TRUE(is_zero(b.minus));
    const IntMatrix pb = pure_positive_basis(d.pure, d.sigma);
    EXPECT_TRUE(lattices_equal(Lattice::from_generators(pb, n), d.pure));
  }
  EXPECT_GT(checked, 10);
}
