#include "latmark/completion.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace latmark;
using testing_support::from_vec;
using testing_support::random_matrix;
using testing_support::to_mat;
using testing_support::to_vec;

namespace {

std::set<oracle::Vec> in_box(const std::vector<IntVector>& vs, long long lo, long long hi) {
  std::set<oracle::Vec> out;
  for (const auto& v : vs) {
    bool inside = true;
    for (const auto& x : v) inside = inside && x >= lo && x <= hi;
    if (inside) out.insert(to_vec(v));
  }
  return out;
}

}  // namespace

TEST(Completion, GraverOfPrincipalLattice) {
  const auto g = graver_completion(Lattice::from_generators(make_matrix({{2, -3}}), 2));
  EXPECT_EQ(g, (std::vector<IntVector>{make_vector({-2, 3}), make_vector({2, -3})}));
}

TEST(Completion, GraverMatchesBoxedBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3, m = 1 + trial % 2;
    const IntMatrix gens = random_matrix(rng, m, n, -2, 2);
    const Lattice l = Lattice::from_generators(gens, n);
    if (l.rank() == 0) continue;
    const long long bound = n == 4 ? 4 : 6;
    const auto lib = graver_completion(l);
    for (const auto& v : lib) EXPECT_TRUE(l.contains(v));
    EXPECT_EQ(in_box(lib, -bound, bound), oracle::graver_in_box(to_mat(l.basis()), n, bound))
        << "generators " << to_string(gens[0]);
  }
}

TEST(Completion, NonnegativeMinimalMatchesBoxedBruteForce) {
  const Lattice pure = Lattice::from_generators(make_matrix({{1, 1}, {5, 0}}), 2);
  EXPECT_EQ(nonnegative_minimal(pure),
            (std::vector<IntVector>{make_vector({0, 5}), make_vector({1, 1}), make_vector({5, 0})}));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2, m = 1 + trial % 2;
    const Lattice l = Lattice::from_generators(random_matrix(rng, m, n, -3, 4), n);
    if (l.rank() == 0) continue;
    const auto lib = nonnegative_minimal(l);
    for (const auto& v : lib) {
      EXPECT_TRUE(l.contains(v));
      EXPECT_TRUE(is_nonnegative(v));
    }
    EXPECT_EQ(in_box(lib, 0, 9), oracle::hilbert_in_box(to_mat(l.basis()), n, 9));
  }
}

TEST(Completion, MinimalCosetPointsMatchBruteForce) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const Lattice l = Lattice::from_generators(random_matrix(rng, 1 + trial % 2, n, -3, 4), n);
    const IntVector c = random_matrix(rng, 1, n, -3, 3)[0];
    const auto lib = minimal_coset_points(l, c);

    const long long bound = 9;
    const oracle::Membership in(to_mat(l.basis()));
    const oracle::Vec cv = to_vec(c);
    std::vector<oracle::Vec> pts;
    oracle::box(n, 0, bound, [&](const oracle::Vec& v) {
      if (in(oracle::sub(v, cv))) pts.push_back(v);
    });
    std::set<oracle::Vec> expected;
    for (const auto& v : pts) {
      bool minimal = true;
      for (const auto& w : pts) minimal = minimal && (w == v || !oracle::leq(w, v));
      if (minimal) expected.insert(v);
    }
    for (const auto& v : lib) EXPECT_TRUE(l.contains(sub(v, c)));
    EXPECT_EQ(in_box(lib, 0, bound), expected) << to_string(c);
  }
}

TEST(Completion, CosetOfZeroLatticeIsItsNonnegativeRepresentative) {
  EXPECT_EQ(minimal_coset_points(Lattice(2), make_vector({2, 3})), (std::vector<IntVector>{make_vector({2, 3})}));
  EXPECT_TRUE(minimal_coset_points(Lattice(2), make_vector({-1, 3})).empty());
}
