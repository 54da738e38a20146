/*
 * C interface to the burnside engine: reduced words in free groups,
 * detection of power factorizations, elementary-move search with
 * verifiable certificates, endomorphism orbits, and the cone metric
 * checks. All objects are opaque handles; every fallible call returns a
 * bnd_status and reports details through bnd_last_error().
 *
 * Words use the text alphabet a..z for generators and A..Z for their
 * inverses; the empty string is the identity. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * bnd_string_free().
 */
#ifndef BURNSIDE_H
#define BURNSIDE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef BND_API
#if defined(_WIN32)
#define BND_API __declspec(dllexport)
#else
#define BND_API __attribute__((visibility("default")))
#endif
#endif

typedef enum bnd_status {
  BND_OK = 0,
  BND_UNKNOWN = 1,      /* budgeted search ended without an answer */
  BND_ERR_INVALID = 2,  /* malformed input or violated precondition */
  BND_ERR_VERIFY = 3,   /* a certificate failed verification */
  BND_ERR_INTERNAL = 4
} bnd_status;

typedef struct bnd_word bnd_word;
typedef struct bnd_scan bnd_scan;
typedef struct bnd_endo bnd_endo;
typedef struct bnd_moveseq bnd_moveseq;

/* Move-system parameters: words of rank `rank`, moves multiply by
 * conjugated n-th powers (n = exponent, odd >= 3), and a move on u^m needs
 * m > exponent/2 - xi with xi = xi_num / xi_den >= 0. */
typedef struct bnd_params {
  int32_t rank;
  int32_t exponent;
  int64_t xi_num;
  int64_t xi_den;
} bnd_params;

typedef struct bnd_budget {
  int64_t max_moves;
  int64_t max_word_length;
  int64_t max_states;
} bnd_budget;

/* Message describing the most recent failure on this thread. The pointer
 * stays valid until the next failing call. */
BND_API const char *bnd_last_error(void);
BND_API void bnd_string_free(char *s);

/* ---- words ---- */
BND_API bnd_status bnd_word_parse(const char *text, int32_t rank, bnd_word **out);
BND_API void bnd_word_free(bnd_word *w);
BND_API bnd_status bnd_word_text(const bnd_word *w, char **out);
BND_API int64_t bnd_word_length(const bnd_word *w);
BND_API int32_t bnd_word_rank(const bnd_word *w);
BND_API bnd_status bnd_word_multiply(const bnd_word *a, const bnd_word *b, bnd_word **out);
BND_API bnd_status bnd_word_invert(const bnd_word *w, bnd_word **out);
BND_API bnd_status bnd_word_power(const bnd_word *w, int64_t k, bnd_word **out);
BND_API bnd_status bnd_word_is_power_free(const bnd_word *w, int64_t p, int32_t *out_flag);
BND_API bnd_status bnd_word_thue_morse(int64_t length, bnd_word **out);

/* ---- power factorizations ---- */
BND_API bnd_status bnd_scan_factorizations(const bnd_word *w, int64_t min_exponent,
                                           bnd_scan **out);
BND_API void bnd_scan_free(bnd_scan *s);
BND_API size_t bnd_scan_size(const bnd_scan *s);
BND_API bnd_status bnd_scan_entry(const bnd_scan *s, size_t i, int64_t *prefix_len,
                                  char **base_text, int64_t *exponent);

/* ---- endomorphisms ---- */
BND_API bnd_status bnd_endo_parse(const char *mapping, int32_t rank, bnd_endo **out);
BND_API void bnd_endo_free(bnd_endo *e);
BND_API bnd_status bnd_endo_text(const bnd_endo *e, char **out);
BND_API bnd_status bnd_endo_apply(const bnd_endo *e, const bnd_word *w, bnd_word **out);
/* seed is a single lowercase generator, e.g. "b" */
BND_API bnd_status bnd_endo_limit_prefix(const bnd_endo *e, const char *seed, int64_t length,
                                         bnd_word **out);

/* ---- move search and certificates ---- */
/* BND_OK with a sequence reaching the empty word, or BND_UNKNOWN. */
BND_API bnd_status bnd_trivialize(const bnd_word *w, const bnd_params *p, const bnd_budget *b,
                                  bnd_moveseq **out);
/* BND_OK with two sequences ending at the same word, or BND_UNKNOWN. */
BND_API bnd_status bnd_identify(const bnd_word *g, const bnd_word *h, const bnd_params *p,
                                const bnd_budget *b, bnd_moveseq **out_g, bnd_moveseq **out_h);
BND_API void bnd_moveseq_free(bnd_moveseq *s);
BND_API size_t bnd_moveseq_size(const bnd_moveseq *s);
BND_API bnd_status bnd_moveseq_step(const bnd_moveseq *s, size_t i, int64_t *prefix_len,
                                    char **base_text, int64_t *exponent);
BND_API bnd_status bnd_moveseq_start(const bnd_moveseq *s, char **out);
BND_API bnd_status bnd_moveseq_end(const bnd_moveseq *s, char **out);
/* JSON record; bnd_moveseq_parse(bnd_moveseq_render(s)) reproduces s. */
BND_API bnd_status bnd_moveseq_render(const bnd_moveseq *s, char **out_json);
BND_API bnd_status bnd_moveseq_parse(const char *json, bnd_moveseq **out);
/* Replays and checks every step plus the global witness product. Returns
 * BND_OK or BND_ERR_VERIFY; *report_out (optional) receives a summary. */
BND_API bnd_status bnd_moveseq_verify(const bnd_moveseq *s, const bnd_params *p,
                                      char **report_out);

/* ---- cone metric ---- */
BND_API bnd_status bnd_mu(double t, double r0, double *out);
BND_API bnd_status bnd_cone_distance(double r, double rp, double dy, double r0, double *out);
/* Property table for mu on a grid; *all_pass is 1 when every property holds
 * within 1e-9. */
BND_API bnd_status bnd_mu_check(double r0, int32_t grid, char **table_out, int32_t *all_pass);

/* ---- helpers ---- */
/* Exact decimal-to-rational conversion, e.g. "1.5" -> 3/2. */
BND_API bnd_status bnd_decimal_to_rational(const char *text, int64_t *num, int64_t *den);

#ifdef __cplusplus
}
#endif

#endif /* BURNSIDE_H */
