#pragma once

// Splitting a lattice into its pure part (supported on sigma, the union of
// supports of nonnegative lattice points) and its positively graded
// projection onto the remaining coordinates.

#include "latmark/binomial.hpp"
#include "latmark/lattice.hpp"

#include <optional>

namespace latmark {

using Support = std::vector<std::size_t>;  // sorted 0-based coordinate indices

struct Decomposition {
  std::size_t n = 0;
  Support sigma;
  Support complement;
  std::optional<IntVector> witness;  // in L, >= 0, support sigma
  Lattice pure;                      // L_pure in Z^n
  Lattice projected;                 // L^sigma in Z^{n - |sigma|}
  IntMatrix projected_lifts;         // lift in L of each projected basis row
  Lattice pure_restricted;           // (L_pure)_sigma in Z^{|sigma|}
  std::vector<IntVector> pure_restricted_graver;  // both signs
  SmithInvariants quotient;          // of Z^{|sigma|} / (L_pure)_sigma
  std::vector<IntVector> hilbert;    // Hilbert basis of L ∩ N^n
};

Support support_sigma(const Lattice& lattice);

/// A primitive w in L with w >= 0 and support sigma; throws if sigma is empty.
IntVector pure_witness(const Lattice& lattice);

std::vector<IntVector> hilbert_basis_positive(const Lattice& lattice);

Lattice pure_sublattice(const Lattice& lattice, std::span<const std::size_t> sigma);
Lattice projected_lattice(const Lattice& lattice, std::span<const std::size_t> sigma);

Decomposition decompose(const Lattice& lattice);

/// Basis of a pure lattice whose elements are >= 0 with support exactly sigma.
/// When `first` is given it must be a primitive full-support element and
/// becomes the first basis vector.
IntMatrix pure_positive_basis(const Lattice& pure, std::span<const std::size_t> sigma,
                              std::optional<IntVector> first = std::nullopt);

std::vector<Binomial> pure_markov_basis(const Lattice& pure, std::span<const std::size_t> sigma);

/// Differences span `pure`, supports lie in its sigma, and the binomials can
/// be ordered so that each has a term supported on the union of the other
/// terms before it (the first term being 1).
bool generates_pure(const Lattice& pure, std::span<const Binomial> set);

/// generates_pure plus |set| == rank(pure).
bool verify_pure_markov(const Lattice& pure, std::span<const Binomial> set);

}  // namespace latmark
