#include "latmark/lattice.hpp"

#include <algorithm>
#include <utility>

namespace latmark {

namespace {

IntMatrix identity(std::size_t m) {
  IntMatrix id(m, zeros(m));
  for (std::size_t i = 0; i < m; ++i) id[i][i] = 1;
  return id;
}

void check_rows(const IntMatrix& rows, std::size_t n) {
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw Error(ErrorKind::dimension_mismatch,
                  "generator of length " + std::to_string(r.size()) +
                      " in dimension " + std::to_string(n));
    }
  }
}

void require_dim(const Lattice& l, std::span<const Integer> v) {
  if (v.size() != l.ambient_dim()) {
    throw Error(ErrorKind::dimension_mismatch,
                "vector of length " + std::to_string(v.size()) + " for lattice in Z^" +
                    std::to_string(l.ambient_dim()));
  }
}

}  // namespace

HermiteForm hermite_form(const IntMatrix& generators, std::size_t n) {
  check_rows(generators, n);
  const std::size_t m = generators.size();
  IntMatrix h = generators;
  IntMatrix u = identity(m);
  std::vector<std::size_t> pivots;

  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i) {
        if (h[i][col] != 0 && (best == m || abs(h[i][col]) < abs(h[best][col]))) best = i;
      }
      if (best == m) break;
      have_pivot = true;
      std::swap(h[row], h[best]);
      std::swap(u[row], u[best]);
      bool clean = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (h[i][col] == 0) continue;
        Integer q = floor_div(h[i][col], h[row][col]);
        axpy(h[i], -q, h[row]);
        axpy(u[i], -q, u[row]);
        if (h[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (h[row][col] < 0) {
      h[row] = neg(h[row]);
      u[row] = neg(u[row]);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = floor_div(h[i][col], h[row][col]);
      if (q != 0) {
        axpy(h[i], -q, h[row]);
        axpy(u[i], -q, u[row]);
      }
    }
    pivots.push_back(col);
    ++row;
  }

  HermiteForm out;
  out.rows.assign(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(row));
  out.transform = std::move(u);
  out.pivots = std::move(pivots);
  return out;
}

IntVector hnf_reduce(const IntMatrix& hnf_rows, std::span<const std::size_t> pivots,
                     IntVector v) {
  for (std::size_t i = 0; i < hnf_rows.size(); ++i) {
    const std::size_t c = pivots[i];
    Integer q = floor_div(v[c], hnf_rows[i][c]);
    if (q != 0) axpy(v, -q, hnf_rows[i]);
  }
  return v;
}

Lattice::Lattice(std::size_t n) : n_(n) {}

Lattice Lattice::from_generators(const IntMatrix& generators, std::size_t n) {
  HermiteForm hf = hermite_form(generators, n);
  Lattice l(n);
  l.basis_ = std::move(hf.rows);
  l.pivots_ = std::move(hf.pivots);
  return l;
}

std::optional<IntVector> Lattice::coordinates(std::span<const Integer> v) const {
  require_dim(*this, v);
  IntVector rest(v.begin(), v.end());
  IntVector coeffs = zeros(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::size_t c = pivots_[i];
    if (rest[c] % basis_[i][c] != 0) return std::nullopt;
    coeffs[i] = rest[c] / basis_[i][c];
    axpy(rest, -coeffs[i], basis_[i]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeffs;
}

bool Lattice::contains(std::span<const Integer> v) const {
  return coordinates(v).has_value();
}

IntVector Lattice::reduce(std::span<const Integer> v) const {
  require_dim(*this, v);
  return hnf_reduce(basis_, pivots_, IntVector(v.begin(), v.end()));
}

IntVector Lattice::combine(std::span<const Integer> coeffs) const {
  if (coeffs.size() != rank()) {
    throw Error(ErrorKind::dimension_mismatch, "coefficient count differs from rank");
  }
  IntVector v = zeros(n_);
  for (std::size_t i = 0; i < rank(); ++i) axpy(v, coeffs[i], basis_[i]);
  return v;
}

Lattice canonicalize(const IntMatrix& generators, std::size_t n) {
  return Lattice::from_generators(generators, n);
}

bool is_member(const Lattice& lattice, std::span<const Integer> v) {
  return lattice.contains(v);
}

bool lattices_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::dimension_mismatch, "lattices live in different ambient spaces");
  }
  return a.basis() == b.basis();
}

IntVector primitive_scale(const Lattice& lattice, std::span<const Integer> v) {
  auto coeffs = lattice.coordinates(v);
  if (!coeffs) throw Error(ErrorKind::not_member, "vector is not in the lattice");
  if (is_zero(v)) throw Error(ErrorKind::invalid_argument, "zero vector has no primitive scale");
  const Integer g = content(*coeffs);
  IntVector u(v.begin(), v.end());
  for (auto& x : u) x /= g;
  return u;
}

IntMatrix unimodular_completion(std::span<const Integer> c) {
  const std::size_t r = c.size();
  IntVector work(c.begin(), c.end());
  // `inv` tracks V^{-1} for the column operations V with work * V = e_1.
  IntMatrix inv = identity(r);
  for (;;) {
    std::size_t p = r;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (work[i] == 0) continue;
      ++nonzero;
      if (p == r || abs(work[i]) < abs(work[p])) p = i;
    }
    if (p == r) throw Error(ErrorKind::invalid_argument, "zero vector is not primitive");
    if (nonzero == 1) {
      if (abs(work[p]) != 1) {
        throw Error(ErrorKind::invalid_argument, "coefficient vector is not primitive");
      }
      if (p != 0) {
        std::swap(work[0], work[p]);
        std::swap(inv[0], inv[p]);
      }
      if (work[0] < 0) {
        work[0] = -work[0];
        inv[0] = neg(inv[0]);
      }
      break;
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (j == p || work[j] == 0) continue;
      Integer q = floor_div(work[j], work[p]);
      work[j] -= q * work[p];
      axpy(inv[p], q, inv[j]);
    }
  }
  return inv;
}

IntMatrix extend_to_basis(const Lattice& lattice, std::span<const Integer> u) {
  auto coeffs = lattice.coordinates(u);
  if (!coeffs) throw Error(ErrorKind::not_member, "vector is not in the lattice");
  if (is_zero(u) || content(*coeffs) != 1) {
    throw Error(ErrorKind::invalid_argument, "vector is not L-primitive");
  }
  const IntMatrix completion = unimodular_completion(*coeffs);
  IntMatrix out;
  out.reserve(lattice.rank());
  for (const auto& row : completion) out.push_back(lattice.combine(row));
  return out;
}

std::optional<Integer> SmithInvariants::quotient_size() const {
  if (free_rank > 0) return std::nullopt;
  Integer p = 1;
  for (const auto& d : factors) p *= d;
  return p;
}

SmithInvariants smith_invariants(const IntMatrix& rows, std::size_t s) {
  check_rows(rows, s);
  IntMatrix a = rows;
  const std::size_t k = a.size();
  const std::size_t lim = std::min(k, s);
  std::size_t t = 0;
  for (; t < lim; ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = k, bj = s;
      for (std::size_t i = t; i < k; ++i) {
        for (std::size_t j = t; j < s; ++j) {
          if (a[i][j] != 0 && (bi == k || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == k) break;
      std::swap(a[t], a[bi]);
      if (bj != t) {
        for (auto& r : a) std::swap(r[t], r[bj]);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < k; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = floor_div(a[i][t], a[t][t]);
        axpy(a[i], -q, a[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = floor_div(a[t][j], a[t][t]);
        for (std::size_t i = t; i < k; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < k && divisible; ++i) {
        for (std::size_t j = t + 1; j < s; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            axpy(a[t], Integer(1), a[i]);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (a[t][t] == 0) break;
  }

  SmithInvariants out;
  for (std::size_t i = 0; i < lim; ++i) {
    if (a[i][i] != 0) out.factors.push_back(abs(a[i][i]));
  }
  out.free_rank = s - out.factors.size();
  return out;
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& r : m) {
    if (r.size() != n) throw Error(ErrorKind::dimension_mismatch, "determinant of non-square matrix");
  }
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix integer_kernel(const IntMatrix& rows, std::size_t n) {
  check_rows(rows, n);
  const std::size_t k = rows.size();
  IntMatrix transposed(n, zeros(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) transposed[j][i] = rows[i][j];
  }
  HermiteForm hf = hermite_form(transposed, k);
  IntMatrix kernel(hf.transform.begin() + static_cast<std::ptrdiff_t>(hf.rows.size()),
                   hf.transform.end());
  return kernel;
}

}  // namespace latmark
