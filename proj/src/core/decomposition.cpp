#include "latmark/decomposition.hpp"

#include "latmark/completion.hpp"
#include "latmark/polyhedra.hpp"

#include <algorithm>

namespace latmark {

namespace {

struct SigmaSearch {
  Support sigma;
  IntVector witness_sum;
};

SigmaSearch search_sigma(const Lattice& lattice) {
  const std::size_t n = lattice.ambient_dim();
  const std::size_t r = lattice.rank();
  const IntMatrix& b = lattice.basis();
  SigmaSearch out{{}, zeros(n)};
  if (r == 0) return out;

  std::vector<bool> covered(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (covered[i]) continue;
    std::vector<Inequality> system;
    system.reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      Inequality row{zeros(r), Integer(j == i ? 1 : 0)};
      for (std::size_t t = 0; t < r; ++t) row.a[t] = b[t][j];
      system.push_back(std::move(row));
    }
    auto point = rational_solution(std::move(system), r);
    if (!point) continue;
    const IntVector w = lattice.combine(clear_denominators(*point));
    for (std::size_t j : support(w)) covered[j] = true;
    axpy(out.witness_sum, Integer(1), w);
  }
  out.sigma = support(out.witness_sum);
  return out;
}

Support complement_of(std::span<const std::size_t> sigma, std::size_t n) {
  std::vector<bool> in(n, false);
  for (std::size_t i : sigma) {
    if (i >= n) throw Error(ErrorKind::invalid_argument, "support index out of range");
    in[i] = true;
  }
  Support out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

struct Split {
  Lattice pure;
  Lattice projected;
  IntMatrix lifts;
  Lattice restricted;
};

// One HNF with the complement columns first separates the two parts: rows
// pivoting in the complement block project to a basis of L^sigma, the rest
// vanish off sigma and form a basis of L_pure.
Split split(const Lattice& lattice, std::span<const std::size_t> sigma) {
  const std::size_t n = lattice.ambient_dim();
  const Support comp = complement_of(sigma, n);
  Support order = comp;
  order.insert(order.end(), sigma.begin(), sigma.end());
  const std::size_t c = comp.size();

  IntMatrix permuted;
  for (const auto& row : lattice.basis()) permuted.push_back(restrict_to(row, order));
  const HermiteForm hf = hermite_form(permuted, n);

  IntMatrix projected_rows, lifts, pure_rows, restricted_rows;
  for (std::size_t i = 0; i < hf.rows.size(); ++i) {
    const IntVector& row = hf.rows[i];
    IntVector original = embed(row, order, n);
    if (hf.pivots[i] < c) {
      projected_rows.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(c));
      lifts.push_back(std::move(original));
    } else {
      restricted_rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(c), row.end());
      pure_rows.push_back(std::move(original));
    }
  }

  Split out{Lattice::from_generators(pure_rows, n),
            Lattice::from_generators(projected_rows, c), {},
            Lattice::from_generators(restricted_rows, sigma.size())};
  // Re-express lifts against the canonical projected basis.
  for (const auto& row : out.projected.basis()) {
    auto coeffs = Lattice::from_generators(projected_rows, c).coordinates(row);
    IntVector lift = zeros(n);
    for (std::size_t t = 0; t < projected_rows.size(); ++t) axpy(lift, (*coeffs)[t], lifts[t]);
    out.lifts.push_back(std::move(lift));
  }
  return out;
}

std::vector<IntVector> hilbert_from_restricted(const Lattice& restricted,
                                               std::span<const std::size_t> sigma, std::size_t n) {
  std::vector<IntVector> out;
  for (const auto& v : nonnegative_minimal(restricted)) out.push_back(embed(v, sigma, n));
  std::sort(out.begin(), out.end());
  return out;
}

bool subset_of(std::span<const Integer> v, const std::vector<bool>& allowed) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && !allowed[i]) return false;
  }
  return true;
}

// True when the coefficient vectors of `vs` in the lattice basis extend to a
// basis of the coefficient space.
bool is_primitive_system(const Lattice& lattice, const IntMatrix& vs) {
  IntMatrix coords;
  for (const auto& v : vs) {
    auto c = lattice.coordinates(v);
    if (!c) return false;
    coords.push_back(std::move(*c));
  }
  const SmithInvariants inv = smith_invariants(coords, lattice.rank());
  if (inv.factors.size() != vs.size()) return false;
  return std::all_of(inv.factors.begin(), inv.factors.end(),
                     [](const Integer& d) { return d == 1; });
}

}  // namespace

Support support_sigma(const Lattice& lattice) { return search_sigma(lattice).sigma; }

IntVector pure_witness(const Lattice& lattice) {
  SigmaSearch s = search_sigma(lattice);
  if (s.sigma.empty()) {
    throw Error(ErrorKind::invalid_argument, "lattice has no nonzero nonnegative element");
  }
  return primitive_scale(lattice, s.witness_sum);
}

std::vector<IntVector> hilbert_basis_positive(const Lattice& lattice) {
  const Support sigma = support_sigma(lattice);
  if (sigma.empty()) return {};
  return hilbert_from_restricted(split(lattice, sigma).restricted, sigma,
                                 lattice.ambient_dim());
}

Lattice pure_sublattice(const Lattice& lattice, std::span<const std::size_t> sigma) {
  return split(lattice, sigma).pure;
}

Lattice projected_lattice(const Lattice& lattice, std::span<const std::size_t> sigma) {
  return split(lattice, sigma).projected;
}

Decomposition decompose(const Lattice& lattice) {
  const std::size_t n = lattice.ambient_dim();
  SigmaSearch s = search_sigma(lattice);
  Split parts = split(lattice, s.sigma);

  Decomposition d;
  d.n = n;
  d.sigma = s.sigma;
  d.complement = complement_of(s.sigma, n);
  if (!s.sigma.empty()) d.witness = primitive_scale(lattice, s.witness_sum);
  d.pure = std::move(parts.pure);
  d.projected = std::move(parts.projected);
  d.projected_lifts = std::move(parts.lifts);
  d.pure_restricted = std::move(parts.restricted);
  d.quotient = smith_invariants(d.pure_restricted.basis(), d.sigma.size());
  if (!d.sigma.empty()) {
    d.pure_restricted_graver = graver_completion(d.pure_restricted);
    for (const auto& v : d.pure_restricted_graver) {
      if (is_nonnegative(v)) d.hilbert.push_back(embed(v, d.sigma, n));
    }
    std::sort(d.hilbert.begin(), d.hilbert.end());
  }
  return d;
}

IntMatrix pure_positive_basis(const Lattice& pure, std::span<const std::size_t> sigma,
                              std::optional<IntVector> first) {
  if (pure.rank() == 0) throw Error(ErrorKind::invalid_argument, "pure lattice has rank 0");
  const IntVector u1 = first ? *first : pure_witness(pure);
  for (std::size_t j : sigma) {
    if (u1[j] <= 0) throw Error(ErrorKind::invalid_argument, "first vector lacks full support");
  }
  IntMatrix basis = extend_to_basis(pure, u1);
  for (std::size_t i = 1; i < basis.size(); ++i) {
    // Least l with basis[i] + l * u1 >= 1 on every sigma coordinate.
    std::optional<Integer> l;
    for (std::size_t j : sigma) {
      Integer need = ceil_div(1 - basis[i][j], u1[j]);
      if (!l || need > *l) l = need;
    }
    axpy(basis[i], *l, u1);
  }
  return basis;
}

std::vector<Binomial> pure_markov_basis(const Lattice& pure, std::span<const std::size_t> sigma) {
  const std::size_t r = pure.rank();
  if (r == 0) return {};
  const std::size_t n = pure.ambient_dim();
  std::vector<IntVector> hilbert = hilbert_basis_positive(pure);

  std::optional<IntVector> u1;
  for (const auto& h : hilbert) {
    if (support(h).size() == sigma.size()) {
      u1 = h;
      break;
    }
  }
  if (!u1) u1 = pure_witness(pure);

  IntMatrix chosen{*u1};
  for (auto it = hilbert.rbegin(); it != hilbert.rend() && chosen.size() < r; ++it) {
    if (*it == *u1) continue;
    chosen.push_back(*it);
    if (!is_primitive_system(pure, chosen)) chosen.pop_back();
  }
  if (chosen.size() < r) chosen = pure_positive_basis(pure, sigma, *u1);

  std::vector<Binomial> out;
  for (auto& u : chosen) out.push_back(Binomial{std::move(u), zeros(n)});
  return out;
}

bool generates_pure(const Lattice& pure, std::span<const Binomial> set) {
  const std::size_t n = pure.ambient_dim();
  for (const auto& b : set) check_binomial(b, n);

  const Support sigma = support_sigma(pure);
  std::vector<bool> in_sigma(n, false);
  for (std::size_t i : sigma) in_sigma[i] = true;
  for (const auto& b : set) {
    if (!subset_of(b.plus, in_sigma) || !subset_of(b.minus, in_sigma)) return false;
  }

  IntMatrix diffs;
  for (const auto& b : set) diffs.push_back(b.difference());
  if (!lattices_equal(Lattice::from_generators(diffs, n), pure)) return false;

  std::vector<bool> reached(n, false);
  std::vector<bool> used(set.size(), false);
  std::size_t count = 0;
  bool progress = true;
  while (progress && count < set.size()) {
    progress = false;
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (used[k]) continue;
      const Binomial& b = set[k];
      if (!subset_of(b.plus, reached) && !subset_of(b.minus, reached)) continue;
      used[k] = true;
      ++count;
      progress = true;
      for (std::size_t i : support(b.plus)) reached[i] = true;
      for (std::size_t i : support(b.minus)) reached[i] = true;
    }
  }
  return count == set.size();
}

bool verify_pure_markov(const Lattice& pure, std::span<const Binomial> set) {
  return set.size() == pure.rank() && generates_pure(pure, set);
}

}  // namespace latmark
