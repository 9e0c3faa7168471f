/* C interface to the latmark library. Every report is returned as a
 * NUL-terminated JSON document (schema 1) that the caller releases with
 * latmark_string_free. Functions return a latmark_status; on failure the
 * message is available from latmark_last_error() in the calling thread. */
#ifndef LATMARK_LATMARK_H
#define LATMARK_LATMARK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LATMARK_API __declspec(dllexport)
#else
#define LATMARK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latmark_status {
  LATMARK_OK = 0,
  LATMARK_FALSE = 1,     /* a verification ran and failed */
  LATMARK_EINPUT = 2,    /* malformed input, dimension mismatch, non-member */
  LATMARK_ERESOURCE = 3, /* a fiber exceeded LATMARK_MAX_FIBER */
  LATMARK_EINTERNAL = 4
} latmark_status;

typedef enum latmark_verify_mode {
  LATMARK_VERIFY_GENERATING = 0,
  LATMARK_VERIFY_MARKOV = 1,
  LATMARK_VERIFY_PURE = 2
} latmark_verify_mode;

typedef struct latmark_lattice latmark_lattice;

LATMARK_API latmark_status latmark_lattice_from_text(const char* text, latmark_lattice** out);
LATMARK_API latmark_status latmark_lattice_from_file(const char* path, latmark_lattice** out);
/* rows is m*n entries in row-major order. */
LATMARK_API latmark_status latmark_lattice_from_rows(const int64_t* rows, size_t m, size_t n,
                                                     latmark_lattice** out);
LATMARK_API void latmark_lattice_free(latmark_lattice* lattice);

LATMARK_API size_t latmark_lattice_dim(const latmark_lattice* lattice);
LATMARK_API size_t latmark_lattice_rank(const latmark_lattice* lattice);

LATMARK_API latmark_status latmark_decompose(const latmark_lattice* lattice, char** json);
LATMARK_API latmark_status latmark_hilbert(const latmark_lattice* lattice, char** json);
LATMARK_API latmark_status latmark_markov(const latmark_lattice* lattice, int has_seed,
                                          uint64_t seed, char** json);
/* monomial: comma- or space-separated exponents. */
LATMARK_API latmark_status latmark_fiber(const latmark_lattice* lattice, const char* monomial,
                                         char** json);
LATMARK_API latmark_status latmark_ci(const latmark_lattice* lattice, char** json);
LATMARK_API latmark_status latmark_indispensable(const latmark_lattice* lattice, char** json);

/* Returns LATMARK_OK when the set passes, LATMARK_FALSE when it does not;
 * *diagnostic (may be NULL) receives "OK" or the reason. */
LATMARK_API latmark_status latmark_verify_text(const latmark_lattice* lattice, const char* set_text,
                                               latmark_verify_mode mode, char** diagnostic);
LATMARK_API latmark_status latmark_verify_file(const latmark_lattice* lattice, const char* set_path,
                                               latmark_verify_mode mode, char** diagnostic);

LATMARK_API const char* latmark_last_error(void);
LATMARK_API void latmark_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LATMARK_LATMARK_H */
