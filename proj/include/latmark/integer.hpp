#pragma once

// Arbitrary-precision integer vectors and the small amount of arithmetic
// shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace latmark {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

enum class ErrorKind {
  dimension_mismatch,
  not_member,
  invalid_argument,
  not_positively_graded,
  parse,
  resource,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

IntVector zeros(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
IntVector make_vector(std::initializer_list<long long> values);
IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows);

bool is_zero(std::span<const Integer> v);
bool is_nonnegative(std::span<const Integer> v);
/// True when v is componentwise >= 0 or componentwise <= 0.
bool is_pure(std::span<const Integer> v);
/// True when v has a positive and a negative entry.
bool is_mixed(std::span<const Integer> v);
bool leq(std::span<const Integer> a, std::span<const Integer> b);

IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector sub(std::span<const Integer> a, std::span<const Integer> b);
IntVector neg(std::span<const Integer> a);
IntVector scale(std::span<const Integer> a, const Integer& k);
void axpy(IntVector& y, const Integer& k, std::span<const Integer> x);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

IntVector positive_part(std::span<const Integer> v);
IntVector negative_part(std::span<const Integer> v);
IntVector componentwise_min(std::span<const Integer> a, std::span<const Integer> b);

/// Indices with nonzero entries, ascending.
std::vector<std::size_t> support(std::span<const Integer> v);

/// Nonnegative gcd of all entries; 0 for the zero vector.
Integer content(std::span<const Integer> v);

/// Conformal order: a is below b when every a_i shares the sign of b_i and
/// |a_i| <= |b_i|.
bool conformal_leq(std::span<const Integer> a, std::span<const Integer> b);

/// Flip sign so the first nonzero entry is positive.
IntVector sign_normalized(std::span<const Integer> v);

IntVector restrict_to(std::span<const Integer> v, std::span<const std::size_t> idx);
/// Inverse of restrict_to: place values at positions idx inside a zero vector.
IntVector embed(std::span<const Integer> values, std::span<const std::size_t> idx,
                std::size_t n);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

std::string to_string(std::span<const Integer> v, const char* sep = ",");

/// Parse a base-10 integer token; throws Error(parse) on anything else.
Integer parse_integer(const std::string& token);

}  // namespace latmark
