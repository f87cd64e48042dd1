/* C interface to libppdiv: predicates, enumerators and generation trees for
 * the Egyptian-fraction number classes built from prime power divisors.
 *
 * All functions return ppdiv_status; on failure ppdiv_last_error() holds a
 * one-line diagnostic for the calling thread. Strings handed out through
 * char** must be released with ppdiv_string_free().
 */
#ifndef PPDIV_H
#define PPDIV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ppdiv_status {
  PPDIV_OK = 0,
  PPDIV_ERR_INVALID_ARGUMENT = 1,
  PPDIV_ERR_RESOURCE_LIMIT = 2,
  PPDIV_ERR_PRECONDITION = 3,
  PPDIV_ERR_PARSE = 4,
  PPDIV_ERR_IO = 5,
  PPDIV_ERR_INTERNAL = 6
} ppdiv_status;

typedef enum ppdiv_verdict {
  PPDIV_COMPOSITE = 0,
  PPDIV_PRIME = 1,
  PPDIV_PROBABLE_PRIME = 2
} ppdiv_verdict;

/* Owns the smallest-prime-factor sieve; safe for concurrent readers. */
typedef struct ppdiv_ctx ppdiv_ctx;
/* Indexed integer sequence (b-file shaped). */
typedef struct ppdiv_seq ppdiv_seq;
/* Generation tree in breadth-first order. */
typedef struct ppdiv_tree ppdiv_tree;

const char* ppdiv_last_error(void);
void ppdiv_string_free(char* s);

/* sieve_limit 0 skips sieve construction; operations that need one will
 * fail with PPDIV_ERR_INVALID_ARGUMENT. The environment variable
 * PPDIV_SIEVE_MEMORY_MB bounds the sieve memory (default 2048). */
ppdiv_status ppdiv_ctx_create(uint64_t sieve_limit, ppdiv_ctx** out);
void ppdiv_ctx_destroy(ppdiv_ctx* ctx);

/* ---- arithmetic ---- */

ppdiv_status ppdiv_factorize(ppdiv_ctx* ctx, const char* n_decimal, char** out_factored);
ppdiv_status ppdiv_is_prime(ppdiv_ctx* ctx, const char* n_decimal, ppdiv_verdict* out);
ppdiv_status ppdiv_smallest_prime_factor(ppdiv_ctx* ctx, uint64_t n, uint64_t* out);

/* ---- per-integer classification ---- */

typedef struct ppdiv_classification {
  uint64_t n;
  int pseudoperfect;
  int primary_pseudoperfect;
  int giuga;
  int pp_pseudoperfect;
  int pp_giuga;
  int murthy;
  int has_efp_level;
  unsigned efp_level;
} ppdiv_classification;

ppdiv_status ppdiv_classify(ppdiv_ctx* ctx, uint64_t n, ppdiv_classification* out);
ppdiv_status ppdiv_f_step(ppdiv_ctx* ctx, uint64_t n, uint64_t* out);
ppdiv_status ppdiv_trajectory(ppdiv_ctx* ctx, uint64_t n, ppdiv_seq** out);
/* Excess sum over prime power divisors minus 1/n, in lowest terms. */
ppdiv_status ppdiv_pp_giuga_excess(ppdiv_ctx* ctx, uint64_t n, char** out_num, char** out_den);
/* p_minus_1_factored may be NULL when p - 1 is small enough to factor;
 * format "2·3^2" (also accepts '*'). *out_defined is 0 when p is not an
 * extended Fermat prime. */
ppdiv_status ppdiv_efp_level(ppdiv_ctx* ctx, const char* p_decimal,
                             const char* p_minus_1_factored, int* out_defined,
                             unsigned* out_level);

/* ---- enumeration and generation ---- */

typedef enum ppdiv_sequence_kind {
  PPDIV_SEQ_PP_PSEUDOPERFECT = 0, /* A283423 */
  PPDIV_SEQ_PP_GIUGA = 1,         /* A286497 */
  PPDIV_SEQ_MURTHY = 2,           /* A073935 */
  PPDIV_SEQ_EFP = 3,              /* A286499 */
  PPDIV_SEQ_PRIMARY_PSEUDOPERFECT = 4, /* A054377 */
  PPDIV_SEQ_GIUGA = 5,            /* A007850 */
  PPDIV_SEQ_A003306 = 6
} ppdiv_sequence_kind;

ppdiv_status ppdiv_enumerate(ppdiv_ctx* ctx, ppdiv_sequence_kind kind, uint64_t limit,
                             ppdiv_seq** out);
/* Maps an OEIS id ("A283423", ...) to the matching enumerator. */
ppdiv_status ppdiv_enumerate_by_id(ppdiv_ctx* ctx, const char* oeis_id, uint64_t limit,
                                   ppdiv_seq** out);

/* depth_limit < 0 means unbounded. */
ppdiv_status ppdiv_murthy_tree(ppdiv_ctx* ctx, const char* value_limit_decimal, int depth_limit,
                               ppdiv_tree** out);
ppdiv_status ppdiv_efp_tree(ppdiv_ctx* ctx, const char* prime_limit_decimal,
                            unsigned exponent_limit, ppdiv_tree** out);

/* variant is one of "i-divide", "i-multiply", "ii", "iii", "iv".
 * predicate_ok reports the verdict of the predicate the construction is
 * guaranteed to satisfy. */
ppdiv_status ppdiv_construct(ppdiv_ctx* ctx, const char* variant, uint64_t n, uint64_t k,
                             char** out_value, char** out_factored, int* out_predicate_ok);
ppdiv_status ppdiv_mersenne_giuga(ppdiv_ctx* ctx, unsigned k, int* out_exists, char** out_value);
ppdiv_status ppdiv_scan_a003306(ppdiv_ctx* ctx, unsigned k_limit, ppdiv_seq** out);
ppdiv_status ppdiv_scan_strict_giuga(ppdiv_ctx* ctx, uint64_t limit, ppdiv_seq** out);

/* ---- sequences ---- */

size_t ppdiv_seq_size(const ppdiv_seq* seq);
int64_t ppdiv_seq_offset(const ppdiv_seq* seq);
const char* ppdiv_seq_id(const ppdiv_seq* seq);
ppdiv_status ppdiv_seq_value(const ppdiv_seq* seq, size_t i, char** out_decimal);
ppdiv_status ppdiv_seq_write_bfile(const ppdiv_seq* seq, const char* path);
ppdiv_status ppdiv_seq_read_bfile(const char* path, ppdiv_seq** out);
/* out_match: 1 on full agreement over the overlapping index range. On
 * mismatch the first divergent index and both values are reported. */
ppdiv_status ppdiv_seq_compare(const ppdiv_seq* computed, const ppdiv_seq* reference,
                               int* out_match, int64_t* out_index, char** out_computed,
                               char** out_reference);
void ppdiv_seq_destroy(ppdiv_seq* seq);

/* ---- trees ---- */

size_t ppdiv_tree_size(const ppdiv_tree* tree);
/* parent is -1 for the root; label is the decimal value, or the factored
 * expression for values beyond 64 bits. edge_label points at static
 * storage. */
ppdiv_status ppdiv_tree_node(const ppdiv_tree* tree, size_t i, char** out_label,
                             int64_t* out_parent, const char** out_edge_label,
                             unsigned* out_level);
ppdiv_status ppdiv_tree_dot(const ppdiv_tree* tree, char** out);
ppdiv_status ppdiv_tree_export_dot(const ppdiv_tree* tree, const char* path);
void ppdiv_tree_destroy(ppdiv_tree* tree);

#ifdef __cplusplus
}
#endif

#endif /* PPDIV_H */
