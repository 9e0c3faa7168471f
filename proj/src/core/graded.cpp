#include "latmark/graded.hpp"

#include "disjoint_sets.hpp"
#include "latmark/completion.hpp"
#include "latmark/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace latmark {

IntVector positive_grading(const Lattice& lattice) {
  const std::size_t n = lattice.ambient_dim();
  if (n == 0) return {};
  const IntMatrix kernel = integer_kernel(lattice.basis(), n);
  const std::size_t k = kernel.size();
  if (k == 0) throw Error(ErrorKind::not_positively_graded, "lattice is not positively graded");

  std::vector<Inequality> system;
  for (std::size_t i = 0; i < n; ++i) {
    Inequality row{zeros(k), Integer(1)};
    for (std::size_t j = 0; j < k; ++j) row.a[j] = kernel[j][i];
    system.push_back(std::move(row));
  }
  auto mu = rational_solution(std::move(system), k);
  if (!mu) throw Error(ErrorKind::not_positively_graded, "lattice is not positively graded");
  std::vector<Rational> omega(n, Rational(0));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) omega[i] += (*mu)[j] * Rational(kernel[j][i]);
  }
  IntVector w = clear_denominators(omega);
  const Integer g = content(w);
  for (auto& x : w) x /= g;
  return w;
}

bool is_positively_graded(const Lattice& lattice) {
  try {
    positive_grading(lattice);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::not_positively_graded) return false;
    throw;
  }
}

Fiber enumerate_fiber(const Lattice& lattice, std::span<const Integer> u) {
  const std::size_t n = lattice.ambient_dim();
  if (u.size() != n) throw Error(ErrorKind::dimension_mismatch, "monomial has wrong length");
  if (!is_nonnegative(u)) throw Error(ErrorKind::invalid_argument, "exponents must be nonnegative");

  Fiber f{IntVector(u.begin(), u.end()), {}};
  const std::size_t r = lattice.rank();
  std::vector<Inequality> system;
  for (std::size_t j = 0; j < n; ++j) {
    Inequality row{zeros(r), Integer(-u[j])};
    for (std::size_t t = 0; t < r; ++t) row.a[t] = lattice.basis()[t][j];
    system.push_back(std::move(row));
  }
  std::vector<IntVector> points;
  try {
    points = integer_points(std::move(system), r, fiber_cap());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_argument) {
      throw Error(ErrorKind::not_positively_graded, "fiber is infinite: lattice is not positively graded");
    }
    throw;
  }
  f.elements.reserve(points.size());
  for (const auto& lambda : points) f.elements.push_back(add(u, lattice.combine(lambda)));
  std::sort(f.elements.begin(), f.elements.end());
  return f;
}

std::vector<IntVector> graver_basis(const Lattice& lattice) {
  positive_grading(lattice);
  std::vector<IntVector> out;
  for (auto& v : graver_completion(lattice)) {
    if (sign_normalized(v) == v) out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<std::size_t>> fiber_components(const std::vector<IntVector>& elements,
                                                       std::span<const Binomial> moves) {
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  detail::DisjointSets sets(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const IntVector& v = elements[i];
    for (const auto& m : moves) {
      for (int dir = 0; dir < 2; ++dir) {
        const IntVector& from = dir == 0 ? m.plus : m.minus;
        const IntVector& to = dir == 0 ? m.minus : m.plus;
        if (from.size() != v.size() || !leq(from, v)) continue;
        IntVector w = v;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += to[k] - from[k];
        auto it = index.find(w);
        if (it != index.end()) sets.unite(i, it->second);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < elements.size(); ++i) groups[sets.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool spath_connected(const Fiber& fiber, std::span<const Binomial> moves) {
  return fiber_components(fiber.elements, moves).size() <= 1;
}

GradedMarkov markov_basis_graded(const Lattice& lattice, std::optional<std::uint64_t> seed) {
  GradedMarkov out;
  out.grading = positive_grading(lattice);
  if (lattice.rank() == 0) return out;

  struct Candidate {
    Integer degree;
    IntVector plus;
  };
  std::vector<Candidate> candidates;
  for (const auto& g : graver_basis(lattice)) {
    IntVector plus = positive_part(g);
    candidates.push_back({dot(out.grading, plus), std::move(plus)});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.plus < b.plus;
  });

  std::mt19937_64 rng(seed.value_or(0));
  if (seed) {
    // Shuffle within each block of equal degree.
    auto it = candidates.begin();
    while (it != candidates.end()) {
      auto end = std::find_if(it, candidates.end(),
                              [&](const Candidate& c) { return c.degree != it->degree; });
      std::shuffle(it, end, rng);
      it = end;
    }
  }

  std::set<IntVector> seen;
  for (const auto& cand : candidates) {
    if (seen.count(cand.plus)) continue;
    Fiber fiber = enumerate_fiber(lattice, cand.plus);
    seen.insert(fiber.elements.begin(), fiber.elements.end());
    auto components = fiber_components(fiber.elements, out.basis);
    if (components.size() <= 1) continue;

    std::vector<std::size_t> component_of(fiber.elements.size());
    for (std::size_t c = 0; c < components.size(); ++c) {
      for (std::size_t i : components[c]) component_of[i] = c;
    }
    std::vector<std::size_t> order(fiber.elements.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (seed) std::shuffle(order.begin(), order.end(), rng);

    BettiFiber betti{std::move(fiber), std::move(components), {}, cand.degree};
    detail::DisjointSets joined(betti.components.size());
    for (std::size_t a = 0; a < order.size() && joined.count() > 1; ++a) {
      for (std::size_t b = a + 1; b < order.size() && joined.count() > 1; ++b) {
        if (!joined.unite(component_of[order[a]], component_of[order[b]])) continue;
        const IntVector diff =
            sub(betti.fiber.elements[order[a]], betti.fiber.elements[order[b]]);
        betti.selected.push_back(Binomial::from_difference(sign_normalized(diff)));
      }
    }
    out.basis.insert(out.basis.end(), betti.selected.begin(), betti.selected.end());
    out.betti.push_back(std::move(betti));
  }
  return out;
}

Indispensables indispensables_from(const GradedMarkov& markov) {
  Indispensables out;
  std::set<IntVector> monomials;
  for (const auto& b : markov.betti) {
    if (b.fiber.elements.size() == 2 && b.components.size() == 2) {
      out.binomials.insert(out.binomials.end(), b.selected.begin(), b.selected.end());
    }
    for (const auto& comp : b.components) {
      if (comp.size() == 1) monomials.insert(b.fiber.elements[comp.front()]);
    }
  }
  std::sort(out.binomials.begin(), out.binomials.end());
  out.monomials.assign(monomials.begin(), monomials.end());
  return out;
}

Indispensables indispensables_graded(const Lattice& lattice) {
  if (lattice.rank() == 0) return {{}, {zeros(lattice.ambient_dim())}};
  return indispensables_from(markov_basis_graded(lattice));
}

}  // namespace latmark
