#include "sgt/sgt.h"

#include "bounds.hpp"
#include "codes.hpp"
#include "decode.hpp"
#include "info.hpp"
#include "ternary.hpp"

#include <cstdio>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

struct sgt_matrix {
    sgt::Matrix m;
};

struct sgt_alpha_result {
    sgt::AlphaResult r;
};

struct sgt_witness {
    sgt::VerifyResult v;
};

namespace {

thread_local std::string g_last_error;

sgt_status fail(sgt_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <class F>
sgt_status guarded(F body) {
    try {
        return body();
    } catch (const sgt::AmbiguityError& e) {
        return fail(SGT_ERR_AMBIGUOUS, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SGT_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SGT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SGT_ERR_INTERNAL, e.what());
    }
}

sgt_status need(const void* p, const char* what) {
    return p ? SGT_OK : fail(SGT_ERR_INVALID, what);
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int* dup_ints(const std::vector<int>& v) {
    int* out = new int[v.empty() ? 1 : v.size()];
    std::memcpy(out, v.data(), v.size() * sizeof(int));
    return out;
}

sgt::Model to_model(const sgt_model& m) {
    sgt::Model spec;
    switch (m.kind) {
        case 0: spec.kind = sgt::Model::AGT; break;
        case 1: spec.kind = sgt::Model::SGT; break;
        case 2: spec.kind = sgt::Model::GGT; break;
        default: throw std::invalid_argument("model kind must be 0, 1 or 2");
    }
    spec.p = m.p;
    spec.noisy = m.noisy != 0;
    spec.q = m.q;
    spec.eta1 = m.eta1;
    spec.eta2 = m.eta2;
    return spec;
}

void to_bound(const sgt::BoundReport& in, sgt_bound* out) {
    std::snprintf(out->kind, sizeof(out->kind), "%s", in.kind.c_str());
    out->exact = in.exact;
    out->asymptotic = in.asymptotic;
    out->integer_value = in.integer_value;
    out->exceeds_one = in.exceeds_one ? 1 : 0;
}

} // namespace

extern "C" {

const char* sgt_last_error(void) { return g_last_error.c_str(); }

void sgt_string_free(char* s) { delete[] s; }
void sgt_ints_free(int* v) { delete[] v; }
void sgt_matrix_free(sgt_matrix* m) { delete m; }
void sgt_alpha_result_free(sgt_alpha_result* r) { delete r; }
void sgt_witness_free(sgt_witness* w) { delete w; }

sgt_status sgt_tern_add(int a, int b, int* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        if (a < 0 || a > 2 || b < 0 || b > 2) throw std::invalid_argument("symbol out of range");
        *out = sgt::tern_add(static_cast<sgt::Symbol>(a), static_cast<sgt::Symbol>(b));
        return SGT_OK;
    });
}

sgt_status sgt_word_sum(const char* const* words, size_t count, char** out) {
    if (auto s = need(words, "words is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        std::vector<sgt::Word> ws;
        ws.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!words[i]) throw std::invalid_argument("word is null");
            ws.push_back(sgt::parse_word(words[i]));
        }
        *out = dup_string(sgt::format_word(sgt::word_sum(ws)));
        return SGT_OK;
    });
}

sgt_status sgt_is_included(const char* y, const char* x, int* out) {
    if (auto s = need(y, "y is null")) return s;
    if (auto s = need(x, "x is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::is_included(sgt::parse_word(y), sgt::parse_word(x)) ? 1 : 0;
        return SGT_OK;
    });
}

sgt_status sgt_matrix_load(const char* text, sgt_matrix** out) {
    if (auto s = need(text, "text is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = new sgt_matrix{sgt::load_matrix(text)};
        return SGT_OK;
    });
}

sgt_status sgt_matrix_save(const sgt_matrix* m, char** out) {
    if (auto s = need(m, "matrix is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = dup_string(sgt::save_matrix(m->m));
        return SGT_OK;
    });
}

sgt_status sgt_matrix_dims(const sgt_matrix* m, int* n, int* N) {
    if (auto s = need(m, "matrix is null")) return s;
    if (auto s = need(n, "n is null")) return s;
    if (auto s = need(N, "N is null")) return s;
    *n = m->m.n;
    *N = m->m.N;
    return SGT_OK;
}

sgt_status sgt_observation(const sgt_matrix* code, const int* defectives, size_t count, char** out) {
    if (auto s = need(code, "matrix is null")) return s;
    if (auto s = need(defectives, "defectives is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        std::vector<int> d(defectives, defectives + count);
        *out = dup_string(sgt::format_word(sgt::observation(code->m, d)));
        return SGT_OK;
    });
}

sgt_status sgt_ggt_observation(const sgt_matrix* code, const int* defectives, size_t count,
                               int eta1, int eta2, char** out) {
    if (auto s = need(code, "matrix is null")) return s;
    if (auto s = need(defectives, "defectives is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        std::vector<int> d(defectives, defectives + count);
        *out = dup_string(sgt::format_word(sgt::ggt_observation(code->m, d, eta1, eta2)));
        return SGT_OK;
    });
}

sgt_status sgt_apply_noise(const char* y, double q, uint64_t seed, char** out) {
    if (auto s = need(y, "y is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
        std::mt19937_64 rng(ss);
        *out = dup_string(sgt::format_word(sgt::apply_noise(sgt::parse_word(y), q, rng)));
        return SGT_OK;
    });
}

sgt_status sgt_entropy2(double z, double* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::entropy2(z);
        return SGT_OK;
    });
}

sgt_status sgt_entropy3(double z, double g, double* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::entropy3(z, g);
        return SGT_OK;
    });
}

sgt_status sgt_mi(int m, int i, const sgt_model* model, double* out) {
    if (auto s = need(model, "model is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::mi_model(m, i, to_model(*model));
        return SGT_OK;
    });
}

sgt_status sgt_mi_oracle(int m, int i, const sgt_model* model, double* out) {
    if (auto s = need(model, "model is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::mi_oracle(m, i, to_model(*model));
        return SGT_OK;
    });
}

sgt_status sgt_alpha(int m, const sgt_model* model, double* out) {
    if (auto s = need(model, "model is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::alpha(m, to_model(*model));
        return SGT_OK;
    });
}

sgt_status sgt_alpha_opt(int m, const sgt_model* family, sgt_alpha_result** out) {
    if (auto s = need(family, "model is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        sgt::Model spec = to_model(*family);
        *out = new sgt_alpha_result{sgt::alpha_opt(m, spec.kind, spec.noisy, spec.q)};
        return SGT_OK;
    });
}

sgt_status sgt_alpha_result_value(const sgt_alpha_result* r, double* out) {
    if (auto s = need(r, "result is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    *out = r->r.value;
    return SGT_OK;
}

sgt_status sgt_alpha_result_count(const sgt_alpha_result* r, int* out) {
    if (auto s = need(r, "result is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    *out = static_cast<int>(r->r.maximizers.size());
    return SGT_OK;
}

sgt_status sgt_alpha_result_maximizer(const sgt_alpha_result* r, int index,
                                      double* p, int* eta1, int* eta2) {
    if (auto s = need(r, "result is null")) return s;
    if (auto s = need(p, "p is null")) return s;
    if (auto s = need(eta1, "eta1 is null")) return s;
    if (auto s = need(eta2, "eta2 is null")) return s;
    if (index < 0 || index >= static_cast<int>(r->r.maximizers.size()))
        return fail(SGT_ERR_INVALID, "maximizer index out of range");
    const auto& mx = r->r.maximizers[static_cast<std::size_t>(index)];
    *p = mx.p;
    *eta1 = mx.eta1;
    *eta2 = mx.eta2;
    return SGT_OK;
}

sgt_status sgt_alpha_result_per_i(const sgt_alpha_result* r, int i, double* out) {
    if (auto s = need(r, "result is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    if (i < 1 || i > static_cast<int>(r->r.per_i.size()))
        return fail(SGT_ERR_INVALID, "split index out of range");
    *out = r->r.per_i[static_cast<std::size_t>(i) - 1];
    return SGT_OK;
}

sgt_status sgt_sufficient_tests(long long N, int m, const sgt_model* model, sgt_bound* out) {
    if (auto s = need(model, "model is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        to_bound(sgt::sufficient_tests(N, m, to_model(*model)), out);
        return SGT_OK;
    });
}

sgt_status sgt_necessary_tests(long long N, int m, const sgt_model* model, sgt_bound* out) {
    if (auto s = need(model, "model is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        to_bound(sgt::necessary_tests(N, m, to_model(*model)), out);
        return SGT_OK;
    });
}

sgt_status sgt_lll_disjunct_pprime(int n, int m, sgt_bound* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        to_bound(sgt::lll_disjunct_pprime(n, m), out);
        return SGT_OK;
    });
}

sgt_status sgt_lll_disjunct_maxN(int n, int m, sgt_bound* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        to_bound(sgt::lll_disjunct_maxN(n, m), out);
        return SGT_OK;
    });
}

sgt_status sgt_lll_disjunct_maxN_agt(int n, int m, sgt_bound* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        to_bound(sgt::lll_disjunct_maxN_agt(n, m), out);
        return SGT_OK;
    });
}

sgt_status sgt_lll_separable_pdprime(int n, sgt_bound* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        to_bound(sgt::lll_separable_pdprime(n), out);
        return SGT_OK;
    });
}

sgt_status sgt_lll_separable_maxN(int n, sgt_bound* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        to_bound(sgt::lll_separable_maxN(n), out);
        return SGT_OK;
    });
}

sgt_status sgt_rate_ratio(int m, double* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::rate_ratio(m);
        return SGT_OK;
    });
}

sgt_status sgt_gv_estimate(int r, sgt_bound* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        to_bound(sgt::gv_estimate(r), out);
        return SGT_OK;
    });
}

sgt_status sgt_sphere_estimate(int r, sgt_bound* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        to_bound(sgt::sphere_estimate(r), out);
        return SGT_OK;
    });
}

sgt_status sgt_gv_exact_check(long long n, int r, int* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::gv_exact_check(n, r) ? 1 : 0;
        return SGT_OK;
    });
}

sgt_status sgt_gf_mul(int a, int b, int k, int* out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::gf_mul(a, b, k);
        return SGT_OK;
    });
}

sgt_status sgt_bch_parity_check(int k, sgt_matrix** out) {
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = new sgt_matrix{sgt::bch_parity_check(k)};
        return SGT_OK;
    });
}

sgt_status sgt_min_distance_at_least_5(const sgt_matrix* H, int* out) {
    if (auto s = need(H, "matrix is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = sgt::min_distance_at_least_5(H->m) ? 1 : 0;
        return SGT_OK;
    });
}

sgt_status sgt_verify_disjunct(const sgt_matrix* code, int m, int allow_big, sgt_witness** out) {
    if (auto s = need(code, "matrix is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = new sgt_witness{sgt::verify_disjunct(code->m, m, allow_big != 0)};
        return SGT_OK;
    });
}

sgt_status sgt_verify_separable(const sgt_matrix* code, int m, int allow_big, sgt_witness** out) {
    if (auto s = need(code, "matrix is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        *out = new sgt_witness{sgt::verify_separable(code->m, m, allow_big != 0)};
        return SGT_OK;
    });
}

sgt_status sgt_witness_ok(const sgt_witness* w, int* out) {
    if (auto s = need(w, "witness is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    *out = w->v.ok ? 1 : 0;
    return SGT_OK;
}

sgt_status sgt_witness_set(const sgt_witness* w, int which, const int** data, size_t* len) {
    if (auto s = need(w, "witness is null")) return s;
    if (auto s = need(data, "data is null")) return s;
    if (auto s = need(len, "len is null")) return s;
    if (which != 0 && which != 1) return fail(SGT_ERR_INVALID, "which must be 0 or 1");
    const auto& v = which == 0 ? w->v.set_a : w->v.set_b;
    *data = v.data();
    *len = v.size();
    return SGT_OK;
}

sgt_status sgt_decode_inclusion(const sgt_matrix* code, const char* y, int m_max,
                                int** out_items, size_t* out_len) {
    if (auto s = need(code, "matrix is null")) return s;
    if (auto s = need(y, "y is null")) return s;
    if (auto s = need(out_items, "out_items is null")) return s;
    if (auto s = need(out_len, "out_len is null")) return s;
    return guarded([&] {
        auto items = sgt::decode_inclusion(code->m, sgt::parse_word(y), m_max);
        *out_items = dup_ints(items);
        *out_len = items.size();
        return SGT_OK;
    });
}

sgt_status sgt_decode_exhaustive(const sgt_matrix* code, const char* y, int m,
                                 const sgt_model* model, int allow_big,
                                 int** out_items, size_t* out_len) {
    if (auto s = need(code, "matrix is null")) return s;
    if (auto s = need(y, "y is null")) return s;
    if (auto s = need(model, "model is null")) return s;
    if (auto s = need(out_items, "out_items is null")) return s;
    if (auto s = need(out_len, "out_len is null")) return s;
    return guarded([&] {
        auto items = sgt::decode_exhaustive(code->m, sgt::parse_word(y), m, to_model(*model), allow_big != 0);
        *out_items = dup_ints(items);
        *out_len = items.size();
        return SGT_OK;
    });
}

sgt_status sgt_run_trials(const sgt_trial_config* cfg, sgt_trial_report* out) {
    if (auto s = need(cfg, "config is null")) return s;
    if (auto s = need(out, "out is null")) return s;
    return guarded([&] {
        sgt::TrialConfig c;
        c.N = cfg->N;
        c.m = cfg->m;
        c.n = cfg->n;
        c.model = to_model(cfg->model);
        c.trials = cfg->trials;
        c.seed = cfg->seed;
        c.design = cfg->design ? &cfg->design->m : nullptr;
        sgt::TrialReport r = sgt::run_trials(c);
        out->trials = r.trials;
        out->successes = r.successes;
        out->ambiguities = r.ambiguities;
        out->wrong_sets = r.wrong_sets;
        out->error_rate = r.error_rate;
        return SGT_OK;
    });
}

} // extern "C"
