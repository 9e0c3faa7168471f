#pragma once

// General lattices: fiber descriptors and their equivalence classes, lifting
// the graded Markov basis of the projection, mu, invariant class multisets,
// indispensability and verification of user-supplied binomial sets.

#include "latmark/decomposition.hpp"
#include "latmark/graded.hpp"

#include <compare>
#include <memory>

namespace latmark {

/// Everything derived once per lattice and reused by the operations below.
class MarkovContext {
 public:
  explicit MarkovContext(const Lattice& lattice,
                         std::optional<std::uint64_t> seed = std::nullopt);

  const Lattice& lattice() const noexcept { return lattice_; }
  const Decomposition& decomposition() const noexcept { return decomposition_; }
  /// Markov basis of the projected lattice, in its coordinates.
  const GradedMarkov& graded() const noexcept { return graded_; }

 private:
  Lattice lattice_;
  Decomposition decomposition_;
  GradedMarkov graded_;
};

struct FiberDescriptor {
  IntVector representative;
  Fiber projected_fiber;  // over the complement of sigma
  /// Minimal points of the fiber, grouped so that generators sharing a
  /// projection are adjacent; sorted by (projection, sigma part).
  std::vector<IntVector> min_generators;
  /// sim_classes[i] lists the generators projecting to projected_fiber.elements[i].
  std::vector<std::vector<std::size_t>> sim_classes;
  /// Connected components of the class graph, as lists of sim_classes indices.
  std::vector<std::vector<std::size_t>> gamma_components;

  bool operator==(const FiberDescriptor&) const = default;
};

FiberDescriptor fiber_descriptor(const MarkovContext& context, std::span<const Integer> u);
FiberDescriptor fiber_descriptor(const Lattice& lattice, std::span<const Integer> u);

/// Number of fibers in each equivalence class; nullopt means infinite.
std::optional<Integer> class_cardinality(const Lattice& lattice);
std::optional<Integer> class_cardinality(const Decomposition& d);

/// F-bar <= G-bar: some projected element of G dominates one of F.
bool class_leq(const FiberDescriptor& f, const FiberDescriptor& g);

/// The u in L restricting to w in L^sigma whose sigma part has least 1-norm
/// in its coset modulo (L_pure)_sigma, starting from the canonical residue.
IntVector lift_to_lattice(const Decomposition& d, std::span<const Integer> w);

/// The binomial of lift_to_lattice(d, w).
Binomial lift_binomial(const Decomposition& d, std::span<const Integer> w);

struct ClassDescriptor {
  std::vector<IntVector> projected_fiber;
  std::optional<Integer> class_cardinality;  // nullopt = infinite
  std::size_t t_value = 1;

  bool operator==(const ClassDescriptor&) const = default;
  bool operator<(const ClassDescriptor& o) const;
};

struct MarkovReport {
  std::vector<Binomial> basis;
  std::size_t mu = 0;
  std::vector<ClassDescriptor> class_multiset;  // sorted
  std::vector<Binomial> pure_part;
  std::vector<Binomial> indispensable_binomials;
  std::vector<IntVector> indispensable_monomials;
  bool universal_markov_finite = true;

  bool operator==(const MarkovReport&) const = default;
};

MarkovReport markov_basis_general(const MarkovContext& context);
MarkovReport markov_basis_general(const Lattice& lattice,
                                  std::optional<std::uint64_t> seed = std::nullopt);

Indispensables indispensables_general(const MarkovContext& context);
Indispensables indispensables_general(const Lattice& lattice);

bool universal_markov_finite(const Decomposition& d);
bool universal_markov_finite(const Lattice& lattice);

struct Verdict {
  bool ok = false;
  std::string diagnostic;
};

/// Throw Error(not_member) if some difference is not in L.
Verdict check_generating_set(const MarkovContext& context, std::span<const Binomial> set);
Verdict check_markov(const MarkovContext& context, std::span<const Binomial> set);
Verdict check_pure_markov(const MarkovContext& context, std::span<const Binomial> set);

bool verify_generating_set(const Lattice& lattice, std::span<const Binomial> set);
bool verify_markov_general(const Lattice& lattice, std::span<const Binomial> set);

}  // namespace latmark
