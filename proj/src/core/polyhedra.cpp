#include "latmark/polyhedra.hpp"

#include <cstdlib>
#include <map>
#include <string>

namespace latmark {

namespace {

constexpr std::size_t kMaxStageSize = 200000;

// Divide out the content of a; returns false if the row is 0 >= b with b > 0.
bool normalize(Inequality& row, bool integral) {
  Integer g = content(row.a);
  if (g == 0) return row.b <= 0;
  if (integral) {
    for (auto& x : row.a) x /= g;
    row.b = ceil_div(row.b, g);
  } else {
    g = boost::multiprecision::gcd(g, row.b);
    for (auto& x : row.a) x /= g;
    row.b /= g;
  }
  return true;
}

struct StageBuilder {
  std::map<IntVector, Integer> rows;
  bool feasible = true;
  bool integral;

  void add(Inequality row) {
    if (!normalize(row, integral)) {
      feasible = false;
      return;
    }
    if (is_zero(row.a)) return;
    auto [it, inserted] = rows.emplace(std::move(row.a), row.b);
    if (!inserted && it->second < row.b) it->second = row.b;
  }

  std::vector<Inequality> take() {
    std::vector<Inequality> out;
    out.reserve(rows.size());
    for (auto& [a, b] : rows) out.push_back({a, b});
    return out;
  }
};

Rational rest_value(const Inequality& row, std::size_t k, std::span<const Rational> prefix) {
  Rational rest = Rational(row.b);
  for (std::size_t j = 0; j < k; ++j) rest -= Rational(row.a[j]) * prefix[j];
  return rest;
}

}  // namespace

FourierMotzkin::FourierMotzkin(std::vector<Inequality> system, std::size_t dim, bool integral)
    : dim_(dim), stages_(dim + 1) {
  StageBuilder top{{}, true, integral};
  for (auto& row : system) {
    if (row.a.size() != dim) {
      throw Error(ErrorKind::dimension_mismatch, "inequality has wrong number of variables");
    }
    top.add(std::move(row));
  }
  feasible_ = top.feasible;
  stages_[dim] = top.take();

  for (std::size_t k = dim; k > 0 && feasible_; --k) {
    const std::size_t var = k - 1;
    StageBuilder next{{}, true, integral};
    std::vector<const Inequality*> pos, negs;
    for (const auto& row : stages_[k]) {
      if (row.a[var] > 0) {
        pos.push_back(&row);
      } else if (row.a[var] < 0) {
        negs.push_back(&row);
      } else {
        next.add(row);
      }
    }
    if (pos.size() * negs.size() > kMaxStageSize) {
      throw Error(ErrorKind::resource, "Fourier-Motzkin elimination grew too large");
    }
    for (const auto* p : pos) {
      for (const auto* q : negs) {
        const Integer cp = -q->a[var];
        const Integer cq = p->a[var];
        Inequality comb{zeros(dim), cp * p->b + cq * q->b};
        for (std::size_t j = 0; j < dim; ++j) comb.a[j] = cp * p->a[j] + cq * q->a[j];
        next.add(std::move(comb));
        if (!next.feasible) break;
      }
      if (!next.feasible) break;
    }
    feasible_ = next.feasible;
    stages_[var] = next.take();
  }
}

std::optional<std::vector<Rational>> FourierMotzkin::rational_point() const {
  if (!feasible_) return std::nullopt;
  std::vector<Rational> x(dim_, Rational(0));
  for (std::size_t k = 0; k < dim_; ++k) {
    std::optional<Rational> lo, hi;
    for (const auto& row : stages_[k + 1]) {
      const Integer& c = row.a[k];
      if (c == 0) continue;
      Rational bound = rest_value(row, k, x) / Rational(c);
      if (c > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) return std::nullopt;
    if (lo) {
      Rational v = Rational(ceil_div(numerator(*lo), denominator(*lo)));
      x[k] = (hi && v > *hi) ? *lo : v;
    } else if (hi) {
      x[k] = Rational(floor_div(numerator(*hi), denominator(*hi)));
    }
  }
  return x;
}

bool FourierMotzkin::integer_bounds(std::size_t k, std::span<const Integer> prefix,
                                    std::optional<Integer>& lo,
                                    std::optional<Integer>& hi) const {
  lo.reset();
  hi.reset();
  for (const auto& row : stages_[k + 1]) {
    const Integer& c = row.a[k];
    if (c == 0) continue;
    Integer rest = row.b;
    for (std::size_t j = 0; j < k; ++j) rest -= row.a[j] * prefix[j];
    if (c > 0) {
      Integer b = ceil_div(rest, c);
      if (!lo || b > *lo) lo = b;
    } else {
      Integer b = floor_div(rest, c);
      if (!hi || b < *hi) hi = b;
    }
  }
  return !(lo && hi && *lo > *hi);
}

std::optional<std::vector<Rational>> rational_solution(std::vector<Inequality> system,
                                                       std::size_t dim) {
  FourierMotzkin fm(std::move(system), dim, false);
  return fm.rational_point();
}

std::vector<IntVector> integer_points(std::vector<Inequality> system, std::size_t dim,
                                      std::size_t cap) {
  FourierMotzkin fm(std::move(system), dim, true);
  std::vector<IntVector> out;
  if (!fm.feasible()) return out;
  if (dim == 0) {
    out.emplace_back();
    return out;
  }

  IntVector prefix(dim);
  auto visit = [&](auto&& self, std::size_t k) -> void {
    std::optional<Integer> lo, hi;
    if (!fm.integer_bounds(k, prefix, lo, hi)) return;
    if (!lo || !hi) throw Error(ErrorKind::invalid_argument, "polyhedron is unbounded");
    for (Integer v = *lo; v <= *hi; ++v) {
      prefix[k] = v;
      if (k + 1 < dim) {
        self(self, k + 1);
        continue;
      }
      out.push_back(prefix);
      if (out.size() > cap) {
        throw Error(ErrorKind::resource, "fiber exceeds " + std::to_string(cap) + " elements");
      }
    }
  };
  visit(visit, 0);
  return out;
}

std::size_t fiber_cap() {
  const char* env = std::getenv("LATMARK_MAX_FIBER");
  if (env == nullptr || *env == '\0') return 100000;
  try {
    unsigned long long v = std::stoull(env);
    return v == 0 ? 100000 : static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return 100000;
  }
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) {
    const Integer d = denominator(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator(x) * (l / denominator(x)));
  return out;
}

}  // namespace latmark
