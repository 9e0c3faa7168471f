#include "latmark/latmark.h"

#include "latmark/io.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct latmark_lattice {
  latmark::Lattice lattice;
};

namespace {

thread_local std::string last_error;

latmark_status fail(latmark_status status, const std::string& message) {
  last_error = message;
  return status;
}

latmark_status status_of(const latmark::Error& e) {
  return e.kind() == latmark::ErrorKind::resource ? LATMARK_ERESOURCE : LATMARK_EINPUT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Body>
latmark_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const latmark::Error& e) {
    return fail(status_of(e), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LATMARK_ERESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(LATMARK_EINTERNAL, e.what());
  } catch (...) {
    return fail(LATMARK_EINTERNAL, "unknown error");
  }
}

template <typename Make>
latmark_status emit_json(const latmark_lattice* lattice, char** json, Make&& make) {
  return guarded([&] {
    if (lattice == nullptr || json == nullptr) return fail(LATMARK_EINPUT, "null argument");
    *json = duplicate(make(lattice->lattice).dump());
    return LATMARK_OK;
  });
}

latmark_status make_lattice(latmark::Lattice l, latmark_lattice** out) {
  *out = new latmark_lattice{std::move(l)};
  return LATMARK_OK;
}

latmark_status verify(const latmark_lattice* lattice, const std::string& text,
                      latmark_verify_mode mode, char** diagnostic) {
  using namespace latmark;
  const auto set = parse_binomial_set(text, lattice->lattice.ambient_dim());
  MarkovContext ctx(lattice->lattice);
  Verdict v;
  switch (mode) {
    case LATMARK_VERIFY_GENERATING:
      v = check_generating_set(ctx, set);
      break;
    case LATMARK_VERIFY_MARKOV:
      v = check_markov(ctx, set);
      break;
    case LATMARK_VERIFY_PURE:
      v = check_pure_markov(ctx, set);
      break;
    default:
      return fail(LATMARK_EINPUT, "unknown verification mode");
  }
  if (diagnostic != nullptr) *diagnostic = duplicate(v.diagnostic);
  return v.ok ? LATMARK_OK : LATMARK_FALSE;
}

}  // namespace

extern "C" {

latmark_status latmark_lattice_from_text(const char* text, latmark_lattice** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) return fail(LATMARK_EINPUT, "null argument");
    return make_lattice(latmark::parse_lattice(text), out);
  });
}

latmark_status latmark_lattice_from_file(const char* path, latmark_lattice** out) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) return fail(LATMARK_EINPUT, "null argument");
    return make_lattice(latmark::read_lattice_file(path), out);
  });
}

latmark_status latmark_lattice_from_rows(const int64_t* rows, size_t m, size_t n,
                                         latmark_lattice** out) {
  return guarded([&] {
    if (out == nullptr || (rows == nullptr && m * n > 0)) return fail(LATMARK_EINPUT, "null argument");
    latmark::IntMatrix gens(m, latmark::zeros(n));
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) gens[i][j] = rows[i * n + j];
    }
    return make_lattice(latmark::Lattice::from_generators(gens, n), out);
  });
}

void latmark_lattice_free(latmark_lattice* lattice) { delete lattice; }

size_t latmark_lattice_dim(const latmark_lattice* lattice) {
  return lattice ? lattice->lattice.ambient_dim() : 0;
}

size_t latmark_lattice_rank(const latmark_lattice* lattice) {
  return lattice ? lattice->lattice.rank() : 0;
}

latmark_status latmark_decompose(const latmark_lattice* lattice, char** json) {
  return emit_json(lattice, json, [](const latmark::Lattice& l) {
    return latmark::to_json(latmark::make_report(l, latmark::decompose(l)));
  });
}

latmark_status latmark_hilbert(const latmark_lattice* lattice, char** json) {
  return emit_json(lattice, json, [](const latmark::Lattice& l) {
    latmark::Json j{{"schema", latmark::kSchemaVersion}, {"kind", "hilbert"}};
    j["hilbert"] = latmark::matrix_to_json(latmark::hilbert_basis_positive(l));
    return j;
  });
}

latmark_status latmark_markov(const latmark_lattice* lattice, int has_seed, uint64_t seed,
                              char** json) {
  return emit_json(lattice, json, [&](const latmark::Lattice& l) {
    std::optional<std::uint64_t> s;
    if (has_seed) s = seed;
    return latmark::to_json(latmark::markov_basis_general(l, s));
  });
}

latmark_status latmark_fiber(const latmark_lattice* lattice, const char* monomial, char** json) {
  if (monomial == nullptr) return fail(LATMARK_EINPUT, "null argument");
  return emit_json(lattice, json, [&](const latmark::Lattice& l) {
    const auto u = latmark::parse_monomial(monomial, l.ambient_dim());
    return latmark::to_json(latmark::fiber_descriptor(l, u));
  });
}

latmark_status latmark_ci(const latmark_lattice* lattice, char** json) {
  return emit_json(lattice, json, [](const latmark::Lattice& l) {
    return latmark::to_json(latmark::is_binomial_ci(l));
  });
}

latmark_status latmark_indispensable(const latmark_lattice* lattice, char** json) {
  return emit_json(lattice, json, [](const latmark::Lattice& l) {
    return latmark::to_json(latmark::indispensables_general(l));
  });
}

latmark_status latmark_verify_text(const latmark_lattice* lattice, const char* set_text,
                                   latmark_verify_mode mode, char** diagnostic) {
  return guarded([&] {
    if (lattice == nullptr || set_text == nullptr) return fail(LATMARK_EINPUT, "null argument");
    return verify(lattice, set_text, mode, diagnostic);
  });
}

latmark_status latmark_verify_file(const latmark_lattice* lattice, const char* set_path,
                                   latmark_verify_mode mode, char** diagnostic) {
  return guarded([&] {
    if (lattice == nullptr || set_path == nullptr) return fail(LATMARK_EINPUT, "null argument");
    return verify(lattice, latmark::read_text_file(set_path), mode, diagnostic);
  });
}

const char* latmark_last_error(void) { return last_error.c_str(); }

void latmark_string_free(char* s) { std::free(s); }

}  // extern "C"
