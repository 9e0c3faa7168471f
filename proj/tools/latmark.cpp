// latmark command-line front end. All computation goes through the C API;
// this file only parses arguments and renders the JSON reports as text.

#include "latmark/latmark.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using Json = nlohmann::json;

struct LatticeDeleter {
  void operator()(latmark_lattice* l) const { latmark_lattice_free(l); }
};
using LatticePtr = std::unique_ptr<latmark_lattice, LatticeDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { latmark_string_free(p); }
};

int report_error(latmark_status status) {
  std::cerr << "error: " << latmark_last_error() << "\n";
  return static_cast<int>(status);
}

std::string number(const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); }

bool all_zero(const Json& v) {
  for (const auto& x : v) {
    if (number(x) != "0") return false;
  }
  return true;
}

std::string vec(const Json& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += number(v[i]);
  }
  return s;
}

std::string monomial(const Json& v) { return all_zero(v) && !v.empty() ? "1" : vec(v); }

std::string binomial(const Json& b) { return monomial(b.at("plus")) + " | " + monomial(b.at("minus")); }

std::string support(const Json& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i].dump();
  }
  return out + "}";
}

void rows(const std::string& title, const Json& m) {
  std::cout << title << (m.empty() ? " none" : "") << "\n";
  for (const auto& r : m) std::cout << "  " << vec(r) << "\n";
}

void render_decompose(const Json& j) {
  std::cout << "ambient dimension: " << j["n"] << "\n"
            << "rank(L): " << j["rank"] << "\n"
            << "sigma: " << support(j["sigma"]) << "\n"
            << "witness: " << (j["witness"].is_null() ? "none" : vec(j["witness"])) << "\n"
            << "rank(L_pure): " << j["rank_pure"] << "\n"
            << "rank(L^sigma): " << j["rank_projected"] << "\n";
  rows("pure basis:", j["pure_basis"]);
  rows("projected basis:", j["projected_basis"]);
  const Json& q = j["quotient"];
  std::cout << "quotient invariants: " << (q["factors"].empty() ? "none" : vec(q["factors"]))
            << " (free rank " << q["free_rank"] << ")\n"
            << "quotient size: " << number(q["size"]) << "\n"
            << "class cardinality: " << number(j["class_cardinality"]) << "\n";
  rows("hilbert basis:", j["hilbert"]);
}

void render_markov(const Json& j) {
  std::cout << "mu: " << j["mu"] << "\n";
  std::cout << "markov basis:" << (j["basis"].empty() ? " none" : "") << "\n";
  for (const auto& b : j["basis"]) std::cout << "  " << binomial(b) << "\n";
  std::cout << "pure part:" << (j["pure_part"].empty() ? " none" : "") << "\n";
  for (const auto& b : j["pure_part"]) std::cout << "  " << binomial(b) << "\n";
  std::cout << "markov fiber classes:" << (j["classes"].empty() ? " none" : "") << "\n";
  for (const auto& c : j["classes"]) {
    std::cout << "  t=" << c["t"] << " cardinality=" << number(c["class_cardinality"])
              << " projected fiber:";
    for (const auto& e : c["projected_fiber"]) std::cout << " [" << monomial(e) << "]";
    std::cout << "\n";
  }
  std::cout << "indispensable binomials:" << (j["indispensable_binomials"].empty() ? " none" : "")
            << "\n";
  for (const auto& b : j["indispensable_binomials"]) std::cout << "  " << binomial(b) << "\n";
  std::cout << "indispensable monomials:";
  if (j["indispensable_monomials"].empty()) std::cout << " none";
  for (const auto& m : j["indispensable_monomials"]) std::cout << " [" << monomial(m) << "]";
  std::cout << "\n"
            << "universal markov basis finite: "
            << (j["universal_markov_finite"].get<bool>() ? "yes" : "no") << "\n";
}

void render_fiber(const Json& j) {
  std::cout << "representative: " << vec(j["representative"]) << "\n";
  std::cout << "minimal generators:\n";
  for (const auto& g : j["min_generators"]) std::cout << "  " << monomial(g) << "\n";
  std::cout << "projected fiber:\n";
  for (const auto& e : j["projected_fiber"]["elements"]) std::cout << "  " << monomial(e) << "\n";
  std::cout << "sim classes:\n";
  const Json& gens = j["min_generators"];
  for (const auto& cls : j["sim_classes"]) {
    std::cout << "  {";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      std::cout << (i ? "; " : "") << monomial(gens[cls[i].get<std::size_t>()]);
    }
    std::cout << "}\n";
  }
  std::cout << "gamma components: " << j["gamma_components"].size() << "\n";
  for (const auto& comp : j["gamma_components"]) std::cout << "  " << comp.dump() << "\n";
}

void render_ci(const Json& j) {
  std::cout << "binomial complete intersection: " << (j["is_ci"].get<bool>() ? "yes" : "no") << "\n"
            << "method: " << j["method"].get<std::string>() << "\n"
            << "mu(L^sigma): " << j["mu_projected"] << "  rank(L^sigma): " << j["rank_projected"]
            << "\n";
  if (j["certificate"].is_null()) {
    std::cout << "certificate: none found\n";
  } else {
    rows("certificate (mixed dominating basis of L^sigma):", j["certificate"]);
  }
  if (!j["block"].is_null()) {
    const Json& b = j["block"];
    std::cout << "block presentation, column order " << support(b["column_order"]) << ":\n";
    rows(" A:", b["A"]);
    rows(" M:", b["M"]);
    rows(" C:", b["C"]);
  }
}

void render_indispensable(const Json& j) {
  auto item = [](const std::string& s) { return s == "1" ? s : "[" + s + "]"; };
  std::cout << "binomials: ";
  if (j["binomials"].empty()) std::cout << "none";
  for (std::size_t i = 0; i < j["binomials"].size(); ++i) {
    std::cout << (i ? ", " : "") << "[" << binomial(j["binomials"][i]) << "]";
  }
  std::cout << "; monomials: ";
  if (j["monomials"].empty()) std::cout << "none";
  for (std::size_t i = 0; i < j["monomials"].size(); ++i) {
    std::cout << (i ? ", " : "") << item(monomial(j["monomials"][i]));
  }
  std::cout << "\n";
}

void render_hilbert(const Json& j) { rows("hilbert basis:", j["hilbert"]); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov bases of lattice ideals"};
  app.require_subcommand(1);

  std::string lattice_path, set_path, mode = "markov", monomial_text;
  bool json = false;
  std::optional<std::uint64_t> seed;

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("lattice", lattice_path, "lattice file (header \"n m\", then m rows)")
        ->required();
    sub->add_flag("--json", json, "print the JSON report");
    return sub;
  };
  add("decompose", "sigma, pure sublattice, projection, quotient, Hilbert basis");
  add("hilbert", "Hilbert basis of the nonnegative lattice points");
  auto* markov = add("markov", "Markov basis, mu and fiber classes");
  markov->add_option("--seed", seed, "shuffle tie-breaking with this seed");
  auto* verify = add("verify", "check a binomial set");
  verify->add_option("--set", set_path, "binomial set file")->required();
  verify->add_option("--mode", mode, "generating | markov | pure")
      ->check(CLI::IsMember({"generating", "markov", "pure"}));
  auto* fibers = add("fibers", "minimal generators and classes of one fiber");
  fibers->add_option("--monomial", monomial_text, "exponent vector, e.g. 0,0,0,1,0")->required();
  add("ci", "binomial complete intersection test");
  add("indispensable", "indispensable binomials and monomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  latmark_lattice* raw = nullptr;
  if (latmark_lattice_from_file(lattice_path.c_str(), &raw) != LATMARK_OK) {
    return report_error(LATMARK_EINPUT);
  }
  LatticePtr lattice(raw);
  const std::string command = app.get_subcommands().front()->get_name();

  if (command == "verify") {
    const latmark_verify_mode m = mode == "generating" ? LATMARK_VERIFY_GENERATING
                                  : mode == "pure"     ? LATMARK_VERIFY_PURE
                                                       : LATMARK_VERIFY_MARKOV;
    CString diag;
    const latmark_status st = latmark_verify_file(lattice.get(), set_path.c_str(), m, &diag.p);
    if (st != LATMARK_OK && st != LATMARK_FALSE) return report_error(st);
    if (json) {
      std::cout << Json{{"schema", 1}, {"kind", "verify"}, {"mode", mode},
                        {"ok", st == LATMARK_OK}, {"diagnostic", diag.p}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << diag.p << "\n";
    }
    return static_cast<int>(st);
  }

  CString out;
  latmark_status st = LATMARK_OK;
  void (*render)(const Json&) = nullptr;
  if (command == "decompose") {
    st = latmark_decompose(lattice.get(), &out.p);
    render = render_decompose;
  } else if (command == "hilbert") {
    st = latmark_hilbert(lattice.get(), &out.p);
    render = render_hilbert;
  } else if (command == "markov") {
    st = latmark_markov(lattice.get(), seed.has_value(), seed.value_or(0), &out.p);
    render = render_markov;
  } else if (command == "fibers") {
    st = latmark_fiber(lattice.get(), monomial_text.c_str(), &out.p);
    render = render_fiber;
  } else if (command == "ci") {
    st = latmark_ci(lattice.get(), &out.p);
    render = render_ci;
  } else {
    st = latmark_indispensable(lattice.get(), &out.p);
    render = render_indispensable;
  }
  if (st != LATMARK_OK) return report_error(st);

  const Json report = Json::parse(out.p);
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    render(report);
  }
  return 0;
}
