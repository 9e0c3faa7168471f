#pragma once

// Exact integer lattice arithmetic: row Hermite normal form, membership,
// primitive vectors, basis extension and Smith invariants.

#include "latmark/integer.hpp"

#include <optional>

namespace latmark {

/// Row Hermite normal form of a generator matrix together with the unimodular
/// transform that produced it: transform * generators = [rows; 0].
struct HermiteForm {
  IntMatrix rows;        // nonzero HNF rows, pivots strictly increasing
  IntMatrix transform;   // m x m, determinant +-1
  std::vector<std::size_t> pivots;
};

/// Pivots are positive; entries above a pivot lie in [0, pivot).
HermiteForm hermite_form(const IntMatrix& generators, std::size_t n);

/// Reduce v against HNF rows; the result is the canonical coset
/// representative of v modulo the row lattice.
IntVector hnf_reduce(const IntMatrix& hnf_rows, std::span<const std::size_t> pivots,
                     IntVector v);

/// A sublattice of Z^n stored by its canonical HNF basis.
class Lattice {
 public:
  /// The zero lattice in Z^n.
  explicit Lattice(std::size_t n = 0);

  static Lattice from_generators(const IntMatrix& generators, std::size_t n);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Integer coordinates of v in basis(), or nullopt when v is not a member.
  std::optional<IntVector> coordinates(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const;

  /// Canonical representative of v + L.
  IntVector reduce(std::span<const Integer> v) const;

  /// Combination sum coeffs[i] * basis()[i].
  IntVector combine(std::span<const Integer> coeffs) const;

  bool operator==(const Lattice& other) const = default;

 private:
  std::size_t n_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Lattice canonicalize(const IntMatrix& generators, std::size_t n);
bool is_member(const Lattice& lattice, std::span<const Integer> v);
/// Throws dimension_mismatch when ambient dimensions differ.
bool lattices_equal(const Lattice& a, const Lattice& b);

/// The L-primitive u with v = lambda * u, lambda a positive integer.
IntVector primitive_scale(const Lattice& lattice, std::span<const Integer> v);

/// A basis of the lattice whose first element is u; u must be L-primitive.
IntMatrix extend_to_basis(const Lattice& lattice, std::span<const Integer> u);

struct SmithInvariants {
  std::vector<Integer> factors;  // d_1 | d_2 | ..., all positive
  std::size_t free_rank = 0;

  /// Cardinality of the quotient; nullopt when it is infinite.
  std::optional<Integer> quotient_size() const;
  bool operator==(const SmithInvariants&) const = default;
};

/// Invariant factors of Z^s modulo the row span of rows.
SmithInvariants smith_invariants(const IntMatrix& rows, std::size_t s);

/// A unimodular matrix whose first row is the primitive vector c.
IntMatrix unimodular_completion(std::span<const Integer> c);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Integer determinant(IntMatrix m);

/// Integer kernel basis: vectors y with rows * y = 0.
IntMatrix integer_kernel(const IntMatrix& rows, std::size_t n);

}  // namespace latmark
