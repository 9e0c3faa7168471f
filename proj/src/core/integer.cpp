#include "latmark/integer.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace latmark {

namespace {

void require_same_size(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::dimension_mismatch,
                "vector lengths differ: " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
  }
}

}  // namespace

IntVector zeros(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v = zeros(n);
  v.at(i) = 1;
  return v;
}

IntVector make_vector(std::initializer_list<long long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m;
  for (const auto& r : rows) m.push_back(make_vector(r));
  return m;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_nonnegative(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

bool is_pure(std::span<const Integer> v) {
  bool pos = false, negative = false;
  for (const auto& x : v) {
    if (x > 0) pos = true;
    if (x < 0) negative = true;
  }
  return !(pos && negative);
}

bool is_mixed(std::span<const Integer> v) {
  bool pos = false, negative = false;
  for (const auto& x : v) {
    if (x > 0) pos = true;
    if (x < 0) negative = true;
  }
  return pos && negative;
}

bool leq(std::span<const Integer> a, std::span<const Integer> b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
  require_same_size(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(std::span<const Integer> a, std::span<const Integer> b) {
  require_same_size(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector neg(std::span<const Integer> a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector scale(std::span<const Integer> a, const Integer& k) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

void axpy(IntVector& y, const Integer& k, std::span<const Integer> x) {
  require_same_size(y, x);
  if (k == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += k * x[i];
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  require_same_size(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector positive_part(std::span<const Integer> v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] > 0 ? v[i] : Integer(0);
  return r;
}

IntVector negative_part(std::span<const Integer> v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] < 0 ? Integer(-v[i]) : Integer(0);
  return r;
}

IntVector componentwise_min(std::span<const Integer> a, std::span<const Integer> b) {
  require_same_size(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

std::vector<std::size_t> support(std::span<const Integer> v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s.push_back(i);
  }
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return abs(g);
}

bool conformal_leq(std::span<const Integer> a, std::span<const Integer> b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Integer& x = a[i];
    const Integer& y = b[i];
    if (x == 0) continue;
    if (x > 0) {
      if (y < x) return false;
    } else {
      if (y > x) return false;
    }
  }
  return true;
}

IntVector sign_normalized(std::span<const Integer> v) {
  for (const auto& x : v) {
    if (x > 0) return IntVector(v.begin(), v.end());
    if (x < 0) return neg(v);
  }
  return IntVector(v.begin(), v.end());
}

IntVector restrict_to(std::span<const Integer> v, std::span<const std::size_t> idx) {
  IntVector r;
  r.reserve(idx.size());
  for (std::size_t i : idx) r.push_back(v[i]);
  return r;
}

IntVector embed(std::span<const Integer> values, std::span<const std::size_t> idx,
                std::size_t n) {
  if (values.size() != idx.size()) {
    throw Error(ErrorKind::dimension_mismatch, "embed: value/index count mismatch");
  }
  IntVector r = zeros(n);
  for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = values[k];
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

std::string to_string(std::span<const Integer> v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

Integer parse_integer(const std::string& token) {
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '-' || token[i] == '+')) ++i;
  if (i == token.size()) throw Error(ErrorKind::parse, "not an integer: '" + token + "'");
  for (std::size_t k = i; k < token.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(token[k]))) {
      throw Error(ErrorKind::parse, "not an integer: '" + token + "'");
    }
  }
  std::string digits = token[0] == '+' ? token.substr(1) : token;
  return Integer(digits);
}

}  // namespace latmark
