#pragma once

// Exact Fourier-Motzkin elimination over systems a.x >= b with integer data:
// rational feasibility with a witness point, and enumeration of the integer
// points of a bounded polyhedron.

#include "latmark/integer.hpp"

#include <optional>

namespace latmark {

/// The half-space a.x >= b.
struct Inequality {
  IntVector a;
  Integer b;
};

class FourierMotzkin {
 public:
  /// integral = true tightens right-hand sides to integers after each
  /// division, which preserves every integer point but not every rational one.
  FourierMotzkin(std::vector<Inequality> system, std::size_t dim, bool integral);

  bool feasible() const noexcept { return feasible_; }
  std::size_t dim() const noexcept { return dim_; }

  /// A rational point of the polyhedron, or nullopt if it is empty.
  std::optional<std::vector<Rational>> rational_point() const;

  /// Integer bounds on x_k given integer values of x_0..x_{k-1}; an empty
  /// optional means the side is unbounded. Returns false when the prefix
  /// already violates a constraint.
  bool integer_bounds(std::size_t k, std::span<const Integer> prefix,
                      std::optional<Integer>& lo, std::optional<Integer>& hi) const;

 private:
  std::size_t dim_;
  bool feasible_ = true;
  // stages_[k] is the projection onto variables 0..k-1.
  std::vector<std::vector<Inequality>> stages_;
};

/// Rational solution of a.x >= b for all rows, or nullopt.
std::optional<std::vector<Rational>> rational_solution(std::vector<Inequality> system,
                                                       std::size_t dim);

/// All integer points of a bounded polyhedron. Throws Error(invalid_argument)
/// when the polyhedron is unbounded and Error(resource) past `cap` points.
std::vector<IntVector> integer_points(std::vector<Inequality> system, std::size_t dim,
                                      std::size_t cap);

/// Fiber size cap from LATMARK_MAX_FIBER, default 100000.
std::size_t fiber_cap();

/// Smallest positive integer multiple of a rational vector that is integral.
IntVector clear_denominators(std::span<const Rational> v);

}  // namespace latmark
