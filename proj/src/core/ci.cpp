#include "latmark/ci.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace latmark {

namespace {

// Calls visit(subset) for every k-subset of {0..n-1}; stops when visit
// returns true and reports whether it did.
template <typename Visit>
bool any_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  for (;;) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool mixed_on(const IntVector& row, const std::vector<std::size_t>& cols) {
  bool pos = false, neg_seen = false;
  for (std::size_t c : cols) {
    if (row[c] > 0) pos = true;
    if (row[c] < 0) neg_seen = true;
  }
  return pos && neg_seen;
}

IntMatrix state_key(const IntMatrix& rows) {
  IntMatrix key;
  for (const auto& r : rows) key.push_back(sign_normalized(r));
  std::sort(key.begin(), key.end());
  return key;
}

std::optional<IntMatrix> search_certificate(const Lattice& projected,
                                            const CertificateSearchLimits& limits) {
  const IntMatrix start = projected.basis();
  if (start.empty()) return IntMatrix{};
  std::deque<std::pair<IntMatrix, std::size_t>> queue;
  std::set<IntMatrix> seen;
  queue.emplace_back(start, 0);
  seen.insert(state_key(start));
  while (!queue.empty()) {
    auto [rows, depth] = std::move(queue.front());
    queue.pop_front();
    if (is_mixed_dominating(rows)) return rows;
    if (depth >= limits.max_depth) continue;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (i == j) continue;
        for (int s : {1, -1}) {
          IntMatrix next = rows;
          axpy(next[i], Integer(s), rows[j]);
          if (!seen.insert(state_key(next)).second) continue;
          if (seen.size() > limits.max_states) return std::nullopt;
          queue.emplace_back(std::move(next), depth + 1);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_mixed_row(std::span<const Integer> v) { return is_mixed(v); }

bool is_mixed_dominating(const IntMatrix& m) {
  if (m.empty()) return true;
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw Error(ErrorKind::dimension_mismatch, "matrix is not rectangular");
    if (!is_mixed(row)) return false;
  }
  const std::size_t limit = std::min(m.size(), cols);
  for (std::size_t k = 2; k <= limit; ++k) {
    const bool found = any_subset(m.size(), k, [&](const std::vector<std::size_t>& rs) {
      return any_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
        return std::all_of(rs.begin(), rs.end(),
                           [&](std::size_t r) { return mixed_on(m[r], cs); });
      });
    });
    if (found) return false;
  }
  return true;
}

bool ci_certificate_check(const Decomposition& d, const IntMatrix& rows) {
  const std::size_t c = d.complement.size();
  for (const auto& r : rows) {
    if (r.size() != c) {
      throw Error(ErrorKind::dimension_mismatch,
                  "certificate rows must have length " + std::to_string(c));
    }
  }
  if (rows.size() != d.projected.rank()) return false;
  if (!lattices_equal(Lattice::from_generators(rows, c), d.projected)) return false;
  return is_mixed_dominating(rows);
}

bool ci_certificate_check(const Lattice& lattice, const IntMatrix& rows) {
  return ci_certificate_check(decompose(lattice), rows);
}

CIReport is_binomial_ci(const MarkovContext& ctx, CertificateSearchLimits limits) {
  const Decomposition& d = ctx.decomposition();
  CIReport r;
  r.mu_projected = ctx.graded().basis.size();
  r.rank_projected = d.projected.rank();
  r.is_ci = r.mu_projected == r.rank_projected;
  if (!r.is_ci) return r;

  r.certificate = search_certificate(d.projected, limits);
  if (!r.certificate) return r;
  r.method = "certificate";

  BlockPresentation block;
  block.column_order = d.sigma;
  block.column_order.insert(block.column_order.end(), d.complement.begin(), d.complement.end());
  for (const auto& row : *r.certificate) {
    block.a.push_back(restrict_to(lift_to_lattice(d, row), d.sigma));
    block.m.push_back(row);
  }
  if (d.pure.rank() > 0) {
    for (const auto& u : pure_positive_basis(d.pure, d.sigma)) {
      block.c.push_back(restrict_to(u, d.sigma));
    }
  }
  r.block = std::move(block);
  return r;
}

CIReport is_binomial_ci(const Lattice& lattice) { return is_binomial_ci(MarkovContext(lattice)); }

}  // namespace latmark
