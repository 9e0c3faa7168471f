#pragma once

// Text formats for lattices, binomial sets and monomials, plus the JSON form
// of every report. Integers that fit in 64 bits are JSON numbers, larger ones
// are decimal strings; both are accepted when reading.

#include "latmark/ci.hpp"
#include "latmark/synthesis.hpp"

#include <nlohmann/json.hpp>

namespace latmark {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Header "n m" followed by m rows of n integers; '#' starts a comment line.
Lattice parse_lattice(const std::string& text);
Lattice read_lattice_file(const std::string& path);

/// One "plus | minus" binomial per line (entries separated by commas or
/// spaces), or a JSON array of {"plus","minus"} objects, optionally wrapped
/// as {"binomials": [...]}.
std::vector<Binomial> parse_binomial_set(const std::string& text, std::size_t n);
std::vector<Binomial> read_binomial_set_file(const std::string& path, std::size_t n);

/// Comma- or space-separated exponents.
IntVector parse_monomial(const std::string& text, std::size_t n);

std::string read_text_file(const std::string& path);

struct DecompositionReport {
  std::size_t n = 0;
  Support sigma;
  std::optional<IntVector> witness;
  IntMatrix pure_basis;
  IntMatrix projected_basis;
  std::size_t rank = 0;
  std::size_t rank_pure = 0;
  std::size_t rank_projected = 0;
  SmithInvariants quotient;
  std::optional<Integer> class_cardinality;  // nullopt = infinite
  std::vector<IntVector> hilbert;

  bool operator==(const DecompositionReport&) const = default;
};

DecompositionReport make_report(const Lattice& lattice, const Decomposition& d);

// JSON conversion. Support indices are written 1-based.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json vector_to_json(std::span<const Integer> v);
IntVector vector_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json binomial_to_json(const Binomial& b);
Binomial binomial_from_json(const Json& j);

Json to_json(const DecompositionReport& r);
DecompositionReport decomposition_report_from_json(const Json& j);
Json to_json(const MarkovReport& r);
MarkovReport markov_report_from_json(const Json& j);
Json to_json(const FiberDescriptor& f);
FiberDescriptor fiber_descriptor_from_json(const Json& j);
Json to_json(const CIReport& r);
CIReport ci_report_from_json(const Json& j);
Json to_json(const Indispensables& r);
Indispensables indispensables_from_json(const Json& j);

}  // namespace latmark
