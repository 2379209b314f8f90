#ifndef SGT_H
#define SGT_H

/* C interface to the group testing toolkit.
 *
 * Every function returns an sgt_status; results travel through out
 * parameters. On failure the out parameters are left untouched and
 * sgt_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with sgt_string_free; int arrays with sgt_ints_free; handles with
 * their matching *_free.
 *
 * Words are strings over '0' / '1' / '2', one character per test, first
 * test first. Matrices are newline-separated rows of '0' / '1', rows =
 * tests, columns = items.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(SGT_BUILD_SHARED)
#define SGT_API __attribute__((visibility("default")))
#else
#define SGT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgt_status {
    SGT_OK = 0,
    SGT_ERR_INVALID = 1,   /* bad argument or guarded size without force */
    SGT_ERR_AMBIGUOUS = 2, /* observation does not determine a unique set */
    SGT_ERR_INTERNAL = 3
} sgt_status;

/* kind: 0 = agt (OR outcomes), 1 = sgt (saturating outcomes),
 * 2 = ggt (two-threshold outcomes, eta1 < eta2 active). noisy != 0
 * dilutes outcomes toward '2' with parameter q. */
typedef struct sgt_model {
    int kind;
    double p;
    int noisy;
    double q;
    int eta1;
    int eta2;
} sgt_model;

typedef struct sgt_matrix sgt_matrix;
typedef struct sgt_alpha_result sgt_alpha_result;
typedef struct sgt_witness sgt_witness;

typedef struct sgt_bound {
    char kind[32];
    double exact;
    double asymptotic;
    long long integer_value;
    int exceeds_one;
} sgt_bound;

typedef struct sgt_trial_config {
    int N;
    int m;
    int n;
    sgt_model model;
    long long trials;
    uint64_t seed;
    const sgt_matrix* design; /* NULL: fresh Bernoulli(p) design per trial */
} sgt_trial_config;

typedef struct sgt_trial_report {
    long long trials;
    long long successes;
    long long ambiguities;
    long long wrong_sets;
    double error_rate;
} sgt_trial_report;

SGT_API const char* sgt_last_error(void);
SGT_API void sgt_string_free(char* s);
SGT_API void sgt_ints_free(int* v);

/* ---- ternary algebra ---- */
SGT_API sgt_status sgt_tern_add(int a, int b, int* out);
SGT_API sgt_status sgt_word_sum(const char* const* words, size_t count, char** out);
SGT_API sgt_status sgt_is_included(const char* y, const char* x, int* out);

/* ---- matrices ---- */
SGT_API sgt_status sgt_matrix_load(const char* text, sgt_matrix** out);
SGT_API sgt_status sgt_matrix_save(const sgt_matrix* m, char** out);
SGT_API sgt_status sgt_matrix_dims(const sgt_matrix* m, int* n, int* N);
SGT_API void sgt_matrix_free(sgt_matrix* m);

SGT_API sgt_status sgt_observation(const sgt_matrix* code, const int* defectives,
                                   size_t count, char** out);
SGT_API sgt_status sgt_ggt_observation(const sgt_matrix* code, const int* defectives,
                                       size_t count, int eta1, int eta2, char** out);
/* Dilution with a fresh engine seeded from seed; deterministic. */
SGT_API sgt_status sgt_apply_noise(const char* y, double q, uint64_t seed, char** out);

/* ---- information ---- */
SGT_API sgt_status sgt_entropy2(double z, double* out);
SGT_API sgt_status sgt_entropy3(double z, double g, double* out);
SGT_API sgt_status sgt_mi(int m, int i, const sgt_model* model, double* out);
SGT_API sgt_status sgt_mi_oracle(int m, int i, const sgt_model* model, double* out);

/* ---- rates ---- */
SGT_API sgt_status sgt_alpha(int m, const sgt_model* model, double* out);
/* Maximize alpha over p (and thresholds for kind 2); model.p is ignored. */
SGT_API sgt_status sgt_alpha_opt(int m, const sgt_model* family, sgt_alpha_result** out);
SGT_API sgt_status sgt_alpha_result_value(const sgt_alpha_result* r, double* out);
SGT_API sgt_status sgt_alpha_result_count(const sgt_alpha_result* r, int* out);
SGT_API sgt_status sgt_alpha_result_maximizer(const sgt_alpha_result* r, int index,
                                              double* p, int* eta1, int* eta2);
SGT_API sgt_status sgt_alpha_result_per_i(const sgt_alpha_result* r, int i, double* out);
SGT_API void sgt_alpha_result_free(sgt_alpha_result* r);

/* ---- bounds ---- */
SGT_API sgt_status sgt_sufficient_tests(long long N, int m, const sgt_model* model, sgt_bound* out);
SGT_API sgt_status sgt_necessary_tests(long long N, int m, const sgt_model* model, sgt_bound* out);
SGT_API sgt_status sgt_lll_disjunct_pprime(int n, int m, sgt_bound* out);
SGT_API sgt_status sgt_lll_disjunct_maxN(int n, int m, sgt_bound* out);
SGT_API sgt_status sgt_lll_disjunct_maxN_agt(int n, int m, sgt_bound* out);
SGT_API sgt_status sgt_lll_separable_pdprime(int n, sgt_bound* out);
SGT_API sgt_status sgt_lll_separable_maxN(int n, sgt_bound* out);
SGT_API sgt_status sgt_rate_ratio(int m, double* out);
SGT_API sgt_status sgt_gv_estimate(int r, sgt_bound* out);
SGT_API sgt_status sgt_sphere_estimate(int r, sgt_bound* out);
SGT_API sgt_status sgt_gv_exact_check(long long n, int r, int* out);

/* ---- codes ---- */
SGT_API sgt_status sgt_gf_mul(int a, int b, int k, int* out);
SGT_API sgt_status sgt_bch_parity_check(int k, sgt_matrix** out);
SGT_API sgt_status sgt_min_distance_at_least_5(const sgt_matrix* H, int* out);
/* Verdict handle: ok == 1 means the property holds and the sets are empty. */
SGT_API sgt_status sgt_verify_disjunct(const sgt_matrix* code, int m, int allow_big, sgt_witness** out);
SGT_API sgt_status sgt_verify_separable(const sgt_matrix* code, int m, int allow_big, sgt_witness** out);
SGT_API sgt_status sgt_witness_ok(const sgt_witness* w, int* out);
/* which: 0 = first set, 1 = second set; data stays valid until free. */
SGT_API sgt_status sgt_witness_set(const sgt_witness* w, int which, const int** data, size_t* len);
SGT_API void sgt_witness_free(sgt_witness* w);

/* ---- decoding ---- */
SGT_API sgt_status sgt_decode_inclusion(const sgt_matrix* code, const char* y, int m_max,
                                        int** out_items, size_t* out_len);
SGT_API sgt_status sgt_decode_exhaustive(const sgt_matrix* code, const char* y, int m,
                                         const sgt_model* model, int allow_big,
                                         int** out_items, size_t* out_len);
SGT_API sgt_status sgt_run_trials(const sgt_trial_config* cfg, sgt_trial_report* out);

#ifdef __cplusplus
}
#endif

#endif /* SGT_H */
