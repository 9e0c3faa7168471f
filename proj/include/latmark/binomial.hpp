#pragma once

// Binomials x^plus - x^minus stored by exponent vectors.

#include "latmark/integer.hpp"

#include <compare>

namespace latmark {

struct Binomial {
  IntVector plus;
  IntVector minus;

  /// The binomial x^{u+} - x^{u-} of a lattice vector u.
  static Binomial from_difference(std::span<const Integer> u);

  IntVector difference() const { return sub(plus, minus); }
  std::size_t dim() const noexcept { return plus.size(); }

  /// Copy with the common monomial factor of both terms removed.
  Binomial reduced() const;
  /// Copy with plus and minus swapped.
  Binomial flipped() const { return {minus, plus}; }

  bool operator==(const Binomial&) const = default;
  bool operator<(const Binomial& o) const {
    return plus != o.plus ? plus < o.plus : minus < o.minus;
  }
};

/// Validates that both exponent vectors are nonnegative and of length n.
void check_binomial(const Binomial& b, std::size_t n);

/// "plus | minus" with comma-separated exponents.
std::string to_string(const Binomial& b);

}  // namespace latmark
