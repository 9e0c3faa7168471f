#include "latmark/completion.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace latmark {

namespace {

bool has_opposite_signs(const IntVector& f, const IntVector& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if ((f[i] > 0 && g[i] < 0) || (f[i] < 0 && g[i] > 0)) return true;
  }
  return false;
}

IntVector normal_form(IntVector s, const std::vector<IntVector>& basis) {
  bool changed = true;
  while (changed && !is_zero(s)) {
    changed = false;
    for (const auto& g : basis) {
      if (conformal_leq(g, s)) {
        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= g[i];
        changed = true;
        if (is_zero(s)) break;
      }
    }
  }
  return s;
}

}  // namespace

std::vector<IntVector> graver_completion(const Lattice& lattice) {
  std::vector<IntVector> g;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  auto push = [&](IntVector v) {
    const std::size_t idx = g.size();
    g.push_back(std::move(v));
    for (std::size_t t = 0; t < idx; ++t) pairs.emplace_back(t, idx);
  };
  for (const auto& b : lattice.basis()) {
    push(b);
    push(neg(b));
  }

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (!has_opposite_signs(g[i], g[j])) continue;
    IntVector r = normal_form(add(g[i], g[j]), g);
    if (is_zero(r)) continue;
    IntVector minus_r = neg(r);
    push(std::move(r));
    push(std::move(minus_r));
  }

  std::set<IntVector> unique(g.begin(), g.end());
  std::vector<IntVector> all(unique.begin(), unique.end());
  std::vector<IntVector> out;
  for (const auto& v : all) {
    bool minimal = true;
    for (const auto& w : all) {
      if (&w != &v && conformal_leq(w, v)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  return out;
}

std::vector<IntVector> nonnegative_minimal(const Lattice& lattice) {
  std::vector<IntVector> out;
  for (auto& v : graver_completion(lattice)) {
    if (is_nonnegative(v)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntVector> minimal_coset_points(const Lattice& lattice, std::span<const Integer> c) {
  const std::size_t s = lattice.ambient_dim();
  if (c.size() != s) throw Error(ErrorKind::dimension_mismatch, "coset offset has wrong length");
  if (s == 0) return {IntVector{}};

  IntMatrix gens;
  for (const auto& b : lattice.basis()) {
    IntVector row = b;
    row.push_back(0);
    gens.push_back(std::move(row));
  }
  IntVector offset = lattice.reduce(c);
  offset.push_back(1);
  gens.push_back(std::move(offset));

  std::vector<IntVector> out;
  for (auto& v : graver_completion(Lattice::from_generators(gens, s + 1))) {
    if (v[s] != 1) continue;
    v.pop_back();
    if (is_nonnegative(v)) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace latmark
