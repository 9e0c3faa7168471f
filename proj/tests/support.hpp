#pragma once

#include "latmark/io.hpp"
#include "oracles.hpp"

#include <random>
#include <string>

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(LATMARK_FIXTURES) + "/" + name; }

inline latmark::Lattice load(const std::string& name) {
  return latmark::read_lattice_file(fixture(name));
}

inline oracle::Vec to_vec(std::span<const latmark::Integer> v) {
  oracle::Vec out;
  for (const auto& x : v) out.push_back(static_cast<long long>(x));
  return out;
}

inline oracle::Mat to_mat(const latmark::IntMatrix& m) {
  oracle::Mat out;
  for (const auto& r : m) out.push_back(to_vec(r));
  return out;
}

inline latmark::IntVector from_vec(const oracle::Vec& v) {
  latmark::IntVector out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

inline latmark::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  latmark::IntMatrix out(m, latmark::IntVector(n));
  for (auto& row : out) {
    for (auto& x : row) x = dist(rng);
  }
  return out;
}

inline latmark::Binomial binomial(std::initializer_list<long long> plus,
                                  std::initializer_list<long long> minus) {
  return {latmark::make_vector(plus), latmark::make_vector(minus)};
}

}  // namespace testing_support
