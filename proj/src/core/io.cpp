#include "latmark/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace latmark {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Error parse_error(std::size_t line, const std::string& what) {
  return Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

IntVector exponents(const std::string& text, std::size_t n, std::size_t line) {
  const auto toks = tokens(text);
  if (toks.size() == 1 && toks[0] == "1" && n != 1) return zeros(n);
  if (toks.size() != n) {
    throw parse_error(line, "expected " + std::to_string(n) + " exponents, found " +
                                std::to_string(toks.size()));
  }
  IntVector v;
  for (const auto& t : toks) {
    try {
      v.push_back(parse_integer(t));
    } catch (const Error& e) {
      throw parse_error(line, e.what());
    }
  }
  return v;
}

Json optional_count_to_json(const std::optional<Integer>& x) {
  return x ? integer_to_json(*x) : Json("infinite");
}

std::optional<Integer> optional_count_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "infinite") return std::nullopt;
  return integer_from_json(j);
}

Json support_to_json(const Support& s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

Support support_from_json(const Json& j) {
  Support out;
  for (const auto& x : j) {
    const auto i = x.get<std::size_t>();
    if (i == 0) throw Error(ErrorKind::parse, "support indices are 1-based");
    out.push_back(i - 1);
  }
  return out;
}

Json index_lists_to_json(const std::vector<std::vector<std::size_t>>& lists) {
  Json out = Json::array();
  for (const auto& l : lists) out.push_back(l);
  return out;
}

std::vector<std::vector<std::size_t>> index_lists_from_json(const Json& j) {
  return j.get<std::vector<std::vector<std::size_t>>>();
}

Json binomials_to_json(std::span<const Binomial> bs) {
  Json out = Json::array();
  for (const auto& b : bs) out.push_back(binomial_to_json(b));
  return out;
}

std::vector<Binomial> binomials_from_json(const Json& j) {
  std::vector<Binomial> out;
  for (const auto& x : j) out.push_back(binomial_from_json(x));
  return out;
}

Json header(const char* kind) { return Json{{"schema", kSchemaVersion}, {"kind", kind}}; }

void check_header(const Json& j, const char* kind) {
  if (!j.is_object() || j.value("schema", 0) != kSchemaVersion || j.value("kind", "") != kind) {
    throw Error(ErrorKind::parse, std::string("not a schema-1 ") + kind + " report");
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Lattice parse_lattice(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::optional<std::pair<std::size_t, std::size_t>> shape;
  IntMatrix rows;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (!shape) {
      const auto toks = tokens(s);
      if (toks.size() != 2) throw parse_error(line, "header must be \"n m\"");
      std::size_t dims[2];
      for (int k = 0; k < 2; ++k) {
        Integer v;
        try {
          v = parse_integer(toks[k]);
        } catch (const Error& e) {
          throw parse_error(line, e.what());
        }
        if (v < 0 || v > 100000) throw parse_error(line, "dimension out of range");
        dims[k] = v.convert_to<std::size_t>();
      }
      if (dims[0] == 0) throw parse_error(line, "ambient dimension must be positive");
      shape = std::make_pair(dims[0], dims[1]);
      continue;
    }
    if (rows.size() == shape->second) throw parse_error(line, "more rows than the header declares");
    rows.push_back(exponents(s, shape->first, line));
  }
  if (!shape) throw Error(ErrorKind::parse, "missing \"n m\" header");
  if (rows.size() != shape->second) {
    throw Error(ErrorKind::parse, "expected " + std::to_string(shape->second) + " rows, found " +
                                      std::to_string(rows.size()));
  }
  return Lattice::from_generators(rows, shape->first);
}

Lattice read_lattice_file(const std::string& path) { return parse_lattice(read_text_file(path)); }

std::vector<Binomial> parse_binomial_set(const std::string& text, std::size_t n) {
  const std::string body = trim(text);
  std::vector<Binomial> out;
  if (!body.empty() && (body[0] == '[' || body[0] == '{')) {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object()) j = j.at("binomials");
    try {
      out = binomials_from_json(j);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::parse, std::string("invalid binomial set: ") + e.what());
    }
  } else {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
      ++line;
      const std::string s = trim(raw);
      if (s.empty() || s[0] == '#') continue;
      const auto bar = s.find('|');
      if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos) {
        throw parse_error(line, "expected \"plus | minus\"");
      }
      out.push_back({exponents(s.substr(0, bar), n, line), exponents(s.substr(bar + 1), n, line)});
    }
  }
  for (const auto& b : out) check_binomial(b, n);
  return out;
}

std::vector<Binomial> read_binomial_set_file(const std::string& path, std::size_t n) {
  return parse_binomial_set(read_text_file(path), n);
}

IntVector parse_monomial(const std::string& text, std::size_t n) {
  IntVector v = exponents(text, n, 1);
  if (!is_nonnegative(v)) throw Error(ErrorKind::invalid_argument, "exponents must be nonnegative");
  return v;
}

DecompositionReport make_report(const Lattice& lattice, const Decomposition& d) {
  DecompositionReport r;
  r.n = d.n;
  r.sigma = d.sigma;
  r.witness = d.witness;
  r.pure_basis = d.pure.basis();
  r.projected_basis = d.projected.basis();
  r.rank = lattice.rank();
  r.rank_pure = d.pure.rank();
  r.rank_projected = d.projected.rank();
  r.quotient = d.quotient;
  r.class_cardinality = class_cardinality(d);
  r.hilbert = d.hilbert;
  return r;
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(x.convert_to<std::int64_t>());
  }
  return Json(x.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorKind::parse, "expected an integer, found " + j.dump());
}

Json vector_to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "expected an integer array");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& r : m) out.push_back(vector_to_json(r));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "expected an array of rows");
  IntMatrix m;
  for (const auto& r : j) m.push_back(vector_from_json(r));
  return m;
}

Json binomial_to_json(const Binomial& b) {
  return Json{{"plus", vector_to_json(b.plus)}, {"minus", vector_to_json(b.minus)}};
}

Binomial binomial_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "binomial must be an object");
  return {vector_from_json(j.at("plus")), vector_from_json(j.at("minus"))};
}

Json to_json(const DecompositionReport& r) {
  Json j = header("decomposition");
  j["n"] = r.n;
  j["sigma"] = support_to_json(r.sigma);
  j["witness"] = r.witness ? vector_to_json(*r.witness) : Json(nullptr);
  j["pure_basis"] = matrix_to_json(r.pure_basis);
  j["projected_basis"] = matrix_to_json(r.projected_basis);
  j["rank"] = r.rank;
  j["rank_pure"] = r.rank_pure;
  j["rank_projected"] = r.rank_projected;
  j["quotient"] = {{"factors", vector_to_json(r.quotient.factors)},
                   {"free_rank", r.quotient.free_rank},
                   {"size", optional_count_to_json(r.quotient.quotient_size())}};
  j["class_cardinality"] = optional_count_to_json(r.class_cardinality);
  j["hilbert"] = matrix_to_json(r.hilbert);
  return j;
}

DecompositionReport decomposition_report_from_json(const Json& j) {
  check_header(j, "decomposition");
  try {
    DecompositionReport r;
    r.n = j.at("n").get<std::size_t>();
    r.sigma = support_from_json(j.at("sigma"));
    if (!j.at("witness").is_null()) r.witness = vector_from_json(j.at("witness"));
    r.pure_basis = matrix_from_json(j.at("pure_basis"));
    r.projected_basis = matrix_from_json(j.at("projected_basis"));
    r.rank = j.at("rank").get<std::size_t>();
    r.rank_pure = j.at("rank_pure").get<std::size_t>();
    r.rank_projected = j.at("rank_projected").get<std::size_t>();
    r.quotient.factors = vector_from_json(j.at("quotient").at("factors"));
    r.quotient.free_rank = j.at("quotient").at("free_rank").get<std::size_t>();
    r.class_cardinality = optional_count_from_json(j.at("class_cardinality"));
    r.hilbert = matrix_from_json(j.at("hilbert"));
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed decomposition report: ") + e.what());
  }
}

Json to_json(const MarkovReport& r) {
  Json j = header("markov");
  j["mu"] = r.mu;
  j["basis"] = binomials_to_json(r.basis);
  j["pure_part"] = binomials_to_json(r.pure_part);
  Json classes = Json::array();
  for (const auto& c : r.class_multiset) {
    classes.push_back({{"projected_fiber", matrix_to_json(c.projected_fiber)},
                       {"class_cardinality", optional_count_to_json(c.class_cardinality)},
                       {"t", c.t_value}});
  }
  j["classes"] = std::move(classes);
  j["indispensable_binomials"] = binomials_to_json(r.indispensable_binomials);
  j["indispensable_monomials"] = matrix_to_json(r.indispensable_monomials);
  j["universal_markov_finite"] = r.universal_markov_finite;
  return j;
}

MarkovReport markov_report_from_json(const Json& j) {
  check_header(j, "markov");
  try {
    MarkovReport r;
    r.mu = j.at("mu").get<std::size_t>();
    r.basis = binomials_from_json(j.at("basis"));
    r.pure_part = binomials_from_json(j.at("pure_part"));
    for (const auto& c : j.at("classes")) {
      r.class_multiset.push_back({matrix_from_json(c.at("projected_fiber")),
                                  optional_count_from_json(c.at("class_cardinality")),
                                  c.at("t").get<std::size_t>()});
    }
    r.indispensable_binomials = binomials_from_json(j.at("indispensable_binomials"));
    r.indispensable_monomials = matrix_from_json(j.at("indispensable_monomials"));
    r.universal_markov_finite = j.at("universal_markov_finite").get<bool>();
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed markov report: ") + e.what());
  }
}

Json to_json(const FiberDescriptor& f) {
  Json j = header("fiber");
  j["representative"] = vector_to_json(f.representative);
  j["projected_fiber"] = {{"representative", vector_to_json(f.projected_fiber.representative)},
                          {"elements", matrix_to_json(f.projected_fiber.elements)}};
  j["min_generators"] = matrix_to_json(f.min_generators);
  j["sim_classes"] = index_lists_to_json(f.sim_classes);
  j["gamma_components"] = index_lists_to_json(f.gamma_components);
  return j;
}

FiberDescriptor fiber_descriptor_from_json(const Json& j) {
  check_header(j, "fiber");
  try {
    FiberDescriptor f;
    f.representative = vector_from_json(j.at("representative"));
    f.projected_fiber.representative = vector_from_json(j.at("projected_fiber").at("representative"));
    f.projected_fiber.elements = matrix_from_json(j.at("projected_fiber").at("elements"));
    f.min_generators = matrix_from_json(j.at("min_generators"));
    f.sim_classes = index_lists_from_json(j.at("sim_classes"));
    f.gamma_components = index_lists_from_json(j.at("gamma_components"));
    return f;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed fiber report: ") + e.what());
  }
}

Json to_json(const CIReport& r) {
  Json j = header("ci");
  j["is_ci"] = r.is_ci;
  j["method"] = r.method;
  j["mu_projected"] = r.mu_projected;
  j["rank_projected"] = r.rank_projected;
  j["certificate"] = r.certificate ? matrix_to_json(*r.certificate) : Json(nullptr);
  if (r.block) {
    j["block"] = {{"column_order", support_to_json(r.block->column_order)},
                  {"A", matrix_to_json(r.block->a)},
                  {"M", matrix_to_json(r.block->m)},
                  {"C", matrix_to_json(r.block->c)}};
  } else {
    j["block"] = nullptr;
  }
  return j;
}

CIReport ci_report_from_json(const Json& j) {
  check_header(j, "ci");
  try {
    CIReport r;
    r.is_ci = j.at("is_ci").get<bool>();
    r.method = j.at("method").get<std::string>();
    r.mu_projected = j.at("mu_projected").get<std::size_t>();
    r.rank_projected = j.at("rank_projected").get<std::size_t>();
    if (!j.at("certificate").is_null()) r.certificate = matrix_from_json(j.at("certificate"));
    if (!j.at("block").is_null()) {
      const Json& b = j.at("block");
      r.block = BlockPresentation{support_from_json(b.at("column_order")),
                                  matrix_from_json(b.at("A")), matrix_from_json(b.at("M")),
                                  matrix_from_json(b.at("C"))};
    }
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed ci report: ") + e.what());
  }
}

Json to_json(const Indispensables& r) {
  Json j = header("indispensable");
  j["binomials"] = binomials_to_json(r.binomials);
  j["monomials"] = matrix_to_json(r.monomials);
  return j;
}

Indispensables indispensables_from_json(const Json& j) {
  check_header(j, "indispensable");
  try {
    return {binomials_from_json(j.at("binomials")), matrix_from_json(j.at("monomials"))};
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed indispensable report: ") + e.what());
  }
}

}  // namespace latmark
