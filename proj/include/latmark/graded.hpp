#pragma once

// Computations for positively graded lattices (L ∩ N^n = {0}), where every
// fiber is finite: fiber enumeration, Graver basis, fiber graphs, minimal
// Markov bases and indispensability.

#include "latmark/binomial.hpp"
#include "latmark/lattice.hpp"

#include <cstdint>
#include <optional>

namespace latmark {

struct Fiber {
  IntVector representative;
  std::vector<IntVector> elements;  // sorted ascending

  bool operator==(const Fiber&) const = default;
};

/// A strictly positive integer vector orthogonal to L. Throws
/// Error(not_positively_graded) when none exists.
IntVector positive_grading(const Lattice& lattice);
bool is_positively_graded(const Lattice& lattice);

/// The full fiber {v >= 0 : v - u in L}. Throws Error(not_positively_graded)
/// for lattices with infinite fibers and Error(resource) past fiber_cap().
Fiber enumerate_fiber(const Lattice& lattice, std::span<const Integer> u);

/// Graver basis, one sign-normalized representative per +-pair, sorted.
std::vector<IntVector> graver_basis(const Lattice& lattice);

/// Connected components (lists of indices into `elements`, each ascending,
/// ordered by first index) of the graph joining v and v - plus + minus for
/// every move applicable in either direction.
std::vector<std::vector<std::size_t>> fiber_components(const std::vector<IntVector>& elements,
                                                       std::span<const Binomial> moves);

bool spath_connected(const Fiber& fiber, std::span<const Binomial> moves);

struct BettiFiber {
  Fiber fiber;
  /// Components of the fiber graph over moves of strictly smaller fibers.
  std::vector<std::vector<std::size_t>> components;
  /// Binomials added in this fiber; they form a spanning tree on components.
  std::vector<Binomial> selected;
  Integer degree;
};

struct GradedMarkov {
  std::vector<Binomial> basis;
  std::vector<BettiFiber> betti;
  IntVector grading;
};

/// Minimal Markov basis. Without a seed the tie-breaking order is the
/// canonical lexicographic one; a seed shuffles it reproducibly.
GradedMarkov markov_basis_graded(const Lattice& lattice,
                                 std::optional<std::uint64_t> seed = std::nullopt);

struct Indispensables {
  std::vector<Binomial> binomials;
  std::vector<IntVector> monomials;

  bool operator==(const Indispensables&) const = default;
};

Indispensables indispensables_from(const GradedMarkov& markov);
Indispensables indispensables_graded(const Lattice& lattice);

}  // namespace latmark
