#include "latmark/binomial.hpp"

namespace latmark {

Binomial Binomial::from_difference(std::span<const Integer> u) {
  return {positive_part(u), negative_part(u)};
}

Binomial Binomial::reduced() const {
  const IntVector common = componentwise_min(plus, minus);
  return {sub(plus, common), sub(minus, common)};
}

void check_binomial(const Binomial& b, std::size_t n) {
  if (b.plus.size() != n || b.minus.size() != n) {
    throw Error(ErrorKind::dimension_mismatch,
                "binomial exponent vectors must have length " + std::to_string(n));
  }
  if (!is_nonnegative(b.plus) || !is_nonnegative(b.minus)) {
    throw Error(ErrorKind::invalid_argument, "binomial exponents must be nonnegative");
  }
}

std::string to_string(const Binomial& b) {
  return to_string(b.plus) + " | " + to_string(b.minus);
}

}  // namespace latmark
