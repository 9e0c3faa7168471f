#include "latmark/synthesis.hpp"

#include "disjoint_sets.hpp"
#include "latmark/completion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latmark {

namespace {

void require_monomial(std::span<const Integer> u, std::size_t n) {
  if (u.size() != n) throw Error(ErrorKind::dimension_mismatch, "monomial has wrong length");
  if (!is_nonnegative(u)) throw Error(ErrorKind::invalid_argument, "exponents must be nonnegative");
}

// Some u in L with u restricted to the complement equal to w.
IntVector lift_vector(const Decomposition& d, std::span<const Integer> w) {
  auto coeffs = d.projected.coordinates(w);
  if (!coeffs) throw Error(ErrorKind::not_member, "vector is not in the projected lattice");
  IntVector u = zeros(d.n);
  for (std::size_t i = 0; i < coeffs->size(); ++i) axpy(u, (*coeffs)[i], d.projected_lifts[i]);
  return u;
}

Integer one_norm(std::span<const Integer> v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

std::string describe_fiber(const BettiFiber& b) {
  return "{" + to_string(b.fiber.elements.front()) + (b.fiber.elements.size() > 1 ? ", ...}" : "}");
}

struct ClassMap {
  // projected element -> (betti index, component index)
  std::map<IntVector, std::pair<std::size_t, std::size_t>> where;
};

ClassMap class_map(const GradedMarkov& g) {
  ClassMap m;
  for (std::size_t k = 0; k < g.betti.size(); ++k) {
    const auto& b = g.betti[k];
    for (std::size_t c = 0; c < b.components.size(); ++c) {
      for (std::size_t i : b.components[c]) m.where[b.fiber.elements[i]] = {k, c};
    }
  }
  return m;
}

Verdict check_set(const MarkovContext& ctx, std::span<const Binomial> set, bool markov) {
  const Decomposition& d = ctx.decomposition();
  const GradedMarkov& g = ctx.graded();
  const std::size_t n = d.n;

  std::vector<Binomial> pure_part;
  std::vector<std::size_t> projected_part;
  for (std::size_t i = 0; i < set.size(); ++i) {
    check_binomial(set[i], n);
    const IntVector diff = set[i].difference();
    if (!ctx.lattice().contains(diff)) {
      throw Error(ErrorKind::not_member,
                  "binomial " + std::to_string(i + 1) + " (" + to_string(set[i]) +
                      "): difference is not a lattice element");
    }
    if (is_zero(restrict_to(diff, d.complement))) {
      pure_part.push_back(set[i]);
    } else {
      projected_part.push_back(i);
    }
  }

  if (markov) {
    std::size_t mu = d.pure.rank();
    for (const auto& b : g.betti) mu += b.components.size() - 1;
    if (set.size() > mu) {
      return {false, "cardinality exceeds μ (" + std::to_string(set.size()) + " > " +
                         std::to_string(mu) + ")"};
    }
    if (pure_part.size() != d.pure.rank()) {
      return {false, "pure part has " + std::to_string(pure_part.size()) +
                         " binomials but rank(L_pure) = " + std::to_string(d.pure.rank())};
    }
  }
  if (!generates_pure(d.pure, pure_part)) {
    return {false, "binomials supported on sigma do not generate the ideal of L_pure"};
  }

  const ClassMap m = class_map(g);
  std::vector<detail::DisjointSets> joins;
  for (const auto& b : g.betti) joins.emplace_back(b.components.size());
  for (std::size_t i : projected_part) {
    const IntVector p = restrict_to(set[i].plus, d.complement);
    const IntVector q = restrict_to(set[i].minus, d.complement);
    auto a = m.where.find(p);
    auto b = m.where.find(q);
    if (a == m.where.end() || b == m.where.end() || a->second.first != b->second.first) {
      if (markov) {
        return {false, "binomial " + std::to_string(i + 1) + " lies in a fiber class that is not Markov"};
      }
      continue;
    }
    const bool merged = joins[a->second.first].unite(a->second.second, b->second.second);
    if (!merged && markov) {
      return {false, "binomial " + std::to_string(i + 1) +
                         " does not join two new components of its class " +
                         describe_fiber(g.betti[a->second.first])};
    }
  }
  for (std::size_t k = 0; k < g.betti.size(); ++k) {
    if (joins[k].count() > 1) {
      return {false, "class " + describe_fiber(g.betti[k]) + " lacks spanning edges (" +
                         std::to_string(joins[k].count()) + " of " +
                         std::to_string(g.betti[k].components.size()) + " components remain)"};
    }
  }
  return {true, "OK"};
}

}  // namespace

MarkovContext::MarkovContext(const Lattice& lattice, std::optional<std::uint64_t> seed)
    : lattice_(lattice),
      decomposition_(decompose(lattice)),
      graded_(markov_basis_graded(decomposition_.projected, seed)) {}

FiberDescriptor fiber_descriptor(const MarkovContext& ctx, std::span<const Integer> u) {
  const Decomposition& d = ctx.decomposition();
  require_monomial(u, d.n);

  FiberDescriptor out;
  out.representative.assign(u.begin(), u.end());
  const IntVector uc = restrict_to(u, d.complement);
  out.projected_fiber = enumerate_fiber(d.projected, uc);

  std::map<IntVector, std::vector<IntVector>> cache;
  for (const auto& p : out.projected_fiber.elements) {
    const IntVector shifted = add(u, lift_vector(d, sub(p, uc)));
    const IntVector c = d.pure_restricted.reduce(restrict_to(shifted, d.sigma));
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, minimal_coset_points(d.pure_restricted, c)).first;

    std::vector<std::size_t> members;
    for (const auto& x : it->second) {
      IntVector gen = embed(p, d.complement, d.n);
      for (std::size_t k = 0; k < d.sigma.size(); ++k) gen[d.sigma[k]] = x[k];
      members.push_back(out.min_generators.size());
      out.min_generators.push_back(std::move(gen));
    }
    out.sim_classes.push_back(std::move(members));
  }

  const std::set<IntVector> here(out.projected_fiber.elements.begin(),
                                 out.projected_fiber.elements.end());
  std::vector<Binomial> smaller;
  for (const auto& b : ctx.graded().basis) {
    if (!here.count(b.plus)) smaller.push_back(b);
  }
  out.gamma_components = fiber_components(out.projected_fiber.elements, smaller);
  return out;
}

FiberDescriptor fiber_descriptor(const Lattice& lattice, std::span<const Integer> u) {
  return fiber_descriptor(MarkovContext(lattice), u);
}

std::optional<Integer> class_cardinality(const Decomposition& d) {
  if (d.pure.rank() == 0) return Integer(1);
  return d.quotient.quotient_size();
}

std::optional<Integer> class_cardinality(const Lattice& lattice) {
  return class_cardinality(decompose(lattice));
}

bool class_leq(const FiberDescriptor& f, const FiberDescriptor& g) {
  for (const auto& a : f.projected_fiber.elements) {
    for (const auto& b : g.projected_fiber.elements) {
      if (a.size() == b.size() && leq(a, b)) return true;
    }
  }
  return false;
}

IntVector lift_to_lattice(const Decomposition& d, std::span<const Integer> w) {
  if (w.size() != d.complement.size()) {
    throw Error(ErrorKind::dimension_mismatch, "projected vector has wrong length");
  }
  IntVector u = lift_vector(d, w);
  IntVector residue = d.pure_restricted.reduce(restrict_to(u, d.sigma));
  // Descend in 1-norm along Graver moves; this reaches the coset minimum.
  for (bool improved = true; improved;) {
    improved = false;
    for (const auto& g : d.pure_restricted_graver) {
      IntVector next = sub(residue, g);
      if (one_norm(next) < one_norm(residue)) {
        residue = std::move(next);
        improved = true;
      }
    }
  }
  for (std::size_t k = 0; k < d.sigma.size(); ++k) u[d.sigma[k]] = residue[k];
  return u;
}

Binomial lift_binomial(const Decomposition& d, std::span<const Integer> w) {
  return Binomial::from_difference(lift_to_lattice(d, w));
}

bool ClassDescriptor::operator<(const ClassDescriptor& o) const {
  if (projected_fiber != o.projected_fiber) return projected_fiber < o.projected_fiber;
  if (t_value != o.t_value) return t_value < o.t_value;
  return class_cardinality < o.class_cardinality;
}

Indispensables indispensables_general(const MarkovContext& ctx) {
  const Decomposition& d = ctx.decomposition();
  const std::size_t rank = d.pure.rank();
  if (rank > 1) return {{}, {zeros(d.n)}};
  if (rank == 1) {
    IntVector u = d.pure.basis().front();
    if (!is_nonnegative(u)) u = neg(u);
    return {{Binomial{u, zeros(d.n)}}, {zeros(d.n), u}};
  }
  if (d.projected.rank() == 0) return {{}, {zeros(d.n)}};
  return indispensables_from(ctx.graded());
}

Indispensables indispensables_general(const Lattice& lattice) {
  return indispensables_general(MarkovContext(lattice));
}

bool universal_markov_finite(const Decomposition& d) {
  const std::size_t rank = d.pure.rank();
  if (rank > 1) return false;
  if (rank == 1 && d.projected.rank() > 0) return false;
  return true;
}

bool universal_markov_finite(const Lattice& lattice) {
  return universal_markov_finite(decompose(lattice));
}

MarkovReport markov_basis_general(const MarkovContext& ctx) {
  const Decomposition& d = ctx.decomposition();
  MarkovReport r;
  r.pure_part = pure_markov_basis(d.pure, d.sigma);
  r.basis = r.pure_part;
  for (const auto& b : ctx.graded().basis) r.basis.push_back(lift_binomial(d, b.difference()));
  r.mu = r.basis.size();

  const auto cardinality = class_cardinality(d);
  for (const auto& b : ctx.graded().betti) {
    r.class_multiset.push_back({b.fiber.elements, cardinality, b.components.size()});
  }
  std::sort(r.class_multiset.begin(), r.class_multiset.end());

  Indispensables ind = indispensables_general(ctx);
  r.indispensable_binomials = std::move(ind.binomials);
  r.indispensable_monomials = std::move(ind.monomials);
  r.universal_markov_finite = universal_markov_finite(d);
  return r;
}

MarkovReport markov_basis_general(const Lattice& lattice, std::optional<std::uint64_t> seed) {
  return markov_basis_general(MarkovContext(lattice, seed));
}

Verdict check_generating_set(const MarkovContext& ctx, std::span<const Binomial> set) {
  return check_set(ctx, set, false);
}

Verdict check_markov(const MarkovContext& ctx, std::span<const Binomial> set) {
  return check_set(ctx, set, true);
}

Verdict check_pure_markov(const MarkovContext& ctx, std::span<const Binomial> set) {
  const Decomposition& d = ctx.decomposition();
  for (std::size_t i = 0; i < set.size(); ++i) {
    check_binomial(set[i], d.n);
    if (!d.pure.contains(set[i].difference())) {
      if (!ctx.lattice().contains(set[i].difference())) {
        throw Error(ErrorKind::not_member, "binomial " + std::to_string(i + 1) +
                                               ": difference is not a lattice element");
      }
      return {false, "binomial " + std::to_string(i + 1) + " is not in the pure sublattice"};
    }
  }
  if (set.size() != d.pure.rank()) {
    return {false, "cardinality " + std::to_string(set.size()) + " differs from rank(L_pure) = " +
                       std::to_string(d.pure.rank())};
  }
  if (!generates_pure(d.pure, set)) {
    return {false, "no ordering satisfies the support conditions, or differences do not span L_pure"};
  }
  return {true, "OK"};
}

bool verify_generating_set(const Lattice& lattice, std::span<const Binomial> set) {
  return check_generating_set(MarkovContext(lattice), set).ok;
}

bool verify_markov_general(const Lattice& lattice, std::span<const Binomial> set) {
  return check_markov(MarkovContext(lattice), set).ok;
}

}  // namespace latmark
