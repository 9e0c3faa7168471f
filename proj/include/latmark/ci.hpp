#pragma once

// Binomial complete intersections: the mu = rank test on the projected
// lattice, mixed dominating certificates, and the block presentation.

#include "latmark/synthesis.hpp"

namespace latmark {

bool is_mixed_row(std::span<const Integer> v);

/// Every row is mixed and no square submatrix has all rows mixed.
bool is_mixed_dominating(const IntMatrix& m);

struct BlockPresentation {
  Support column_order;  // sigma first, then its complement
  IntMatrix a;           // sigma part of the lifted certificate rows
  IntMatrix m;           // the certificate rows
  IntMatrix c;           // positive basis of the pure part, restricted to sigma

  bool operator==(const BlockPresentation&) const = default;
};

struct CIReport {
  bool is_ci = false;
  std::string method = "mu-rank";
  std::size_t mu_projected = 0;
  std::size_t rank_projected = 0;
  std::optional<IntMatrix> certificate;
  std::optional<BlockPresentation> block;

  bool operator==(const CIReport&) const = default;
};

struct CertificateSearchLimits {
  std::size_t max_depth = 6;
  std::size_t max_states = 20000;
};

CIReport is_binomial_ci(const MarkovContext& context, CertificateSearchLimits limits = {});
CIReport is_binomial_ci(const Lattice& lattice);

/// Rows form a basis of L^sigma and are mixed dominating.
bool ci_certificate_check(const Lattice& lattice, const IntMatrix& rows);
bool ci_certificate_check(const Decomposition& d, const IntMatrix& rows);

}  // namespace latmark
