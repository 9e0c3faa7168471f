#pragma once

// Completion procedure for conformally minimal lattice vectors, and the
// two minimal-point problems it answers: the Hilbert basis of L ∩ N^n and the
// minimal nonnegative points of a coset c + L.

#include "latmark/lattice.hpp"

namespace latmark {

/// All conformally minimal nonzero vectors of the lattice, both signs,
/// sorted. Works for any lattice, graded or not.
std::vector<IntVector> graver_completion(const Lattice& lattice);

/// Minimal nonzero elements of L ∩ N^n, sorted.
std::vector<IntVector> nonnegative_minimal(const Lattice& lattice);

/// The componentwise-minimal points of (c + L) ∩ N^n, sorted. Requires the
/// coset to meet N^n in a set whose minimal points are finite (always true).
std::vector<IntVector> minimal_coset_points(const Lattice& lattice, std::span<const Integer> c);

}  // namespace latmark
