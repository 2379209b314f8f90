#include "bounds.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sgt {

namespace {

constexpr double LN2 = 0.69314718055994530942;
constexpr int GRID_POINTS = 2001;

double log2_binom(long long N, long long k) {
    if (k < 0 || k > N) return -std::numeric_limits<double>::infinity();
    return (std::lgamma(static_cast<double>(N) + 1) - std::lgamma(static_cast<double>(k) + 1) -
            std::lgamma(static_cast<double>(N - k) + 1)) / LN2;
}

// Golden-section maximization of a unimodal bracket; returns (argmax, max).
template <class F>
std::pair<double, double> golden_max(F f, double lo, double hi, double tol) {
    const double gr = 0.6180339887498948482;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    double xm = 0.5 * (a + b), fm = f(xm);
    if (f1 > fm) {
        fm = f1;
        xm = x1;
    }
    if (f2 > fm) {
        fm = f2;
        xm = x2;
    }
    return {xm, fm};
}

struct Candidate {
    double value = 0.0;
    double p = 0.0;
    int eta1 = -1;
    int eta2 = -1;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.p != b.p) return a.p < b.p;
    if (a.eta1 != b.eta1) return a.eta1 < b.eta1;
    return a.eta2 < b.eta2;
}

// Binomial pmf rows with prefix/suffix tails for Binomial(i, p), i = 0..m.
// The suffix is accumulated from its own terms so thin upper tails keep
// their relative accuracy.
struct TailTables {
    int m = 0;
    std::vector<std::vector<double>> pmf, pre, suf;

    void build(int m_, double p) {
        m = m_;
        pmf.assign(static_cast<std::size_t>(m) + 1, {});
        pre.assign(static_cast<std::size_t>(m) + 1, {});
        suf.assign(static_cast<std::size_t>(m) + 1, {});
        pmf[0] = {1.0};
        const double u = 1.0 - p;
        for (int i = 1; i <= m; ++i) {
            auto& row = pmf[static_cast<std::size_t>(i)];
            const auto& prev = pmf[static_cast<std::size_t>(i) - 1];
            row.assign(static_cast<std::size_t>(i) + 1, 0.0);
            for (int j = 0; j <= i; ++j) {
                double v = 0.0;
                if (j < i) v += u * prev[static_cast<std::size_t>(j)];
                if (j > 0) v += p * prev[static_cast<std::size_t>(j) - 1];
                row[static_cast<std::size_t>(j)] = v;
            }
        }
        for (int i = 0; i <= m; ++i) {
            const auto& row = pmf[static_cast<std::size_t>(i)];
            auto& lo = pre[static_cast<std::size_t>(i)];
            auto& hi = suf[static_cast<std::size_t>(i)];
            lo.assign(row.size(), 0.0);
            hi.assign(row.size(), 0.0);
            double acc = 0.0;
            for (int j = 0; j <= i; ++j) lo[static_cast<std::size_t>(j)] = (acc += row[static_cast<std::size_t>(j)]);
            acc = 0.0;
            for (int j = i; j >= 0; --j) hi[static_cast<std::size_t>(j)] = (acc += row[static_cast<std::size_t>(j)]);
        }
    }

    double prefix(int i, int hi_j) const { // P(J <= hi_j), J ~ Bin(i, p)
        if (hi_j < 0) return 0.0;
        if (hi_j >= i) return 1.0;
        return pre[static_cast<std::size_t>(i)][static_cast<std::size_t>(hi_j)];
    }

    double suffix(int i, int lo_j) const { // P(J >= lo_j)
        if (lo_j <= 0) return 1.0;
        if (lo_j > i) return 0.0;
        return suf[static_cast<std::size_t>(i)][static_cast<std::size_t>(lo_j)];
    }
};

// alpha for a threshold pair straight from precomputed tables; used only
// to locate grid maxima, which are then re-refined through mi_ggt.
double alpha_pair_tables(const TailTables& T, int m, int e1, int e2) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= m; ++i) {
        const auto& out = T.pmf[static_cast<std::size_t>(m - i)];
        double total = 0.0;
        int kmax = e1 < m - i ? e1 : m - i;
        for (int k = 0; k <= kmax; ++k)
            total += out[static_cast<std::size_t>(k)] *
                     entropy3(T.prefix(i, e1 - k), T.suffix(i, e2 - k + 1));
        int kmax2 = e2 < m - i ? e2 : m - i;
        for (int k = e1 + 1; k <= kmax2; ++k)
            total += out[static_cast<std::size_t>(k)] * entropy2(T.suffix(i, e2 - k + 1));
        best = std::min(best, total / i);
    }
    return best;
}

double alpha_pair(int m, double p, int e1, int e2) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= m; ++i) best = std::min(best, mi_ggt(m, i, p, e1, e2) / i);
    return best;
}

// Scan grid values for local maxima and refine each bracket; appends one
// candidate per refined maximum, deduplicated at 1e-5 in p.
template <class F>
void refine_maxima(const std::vector<double>& ps, const std::vector<double>& vals, F f,
                   int e1, int e2, std::vector<Candidate>& out) {
    std::vector<Candidate> local;
    const int n = static_cast<int>(ps.size());
    for (int j = 0; j < n; ++j) {
        double left = j > 0 ? vals[static_cast<std::size_t>(j) - 1] : -1.0;
        double right = j + 1 < n ? vals[static_cast<std::size_t>(j) + 1] : -1.0;
        if (vals[static_cast<std::size_t>(j)] < left || vals[static_cast<std::size_t>(j)] < right) continue;
        double lo = j > 0 ? ps[static_cast<std::size_t>(j) - 1] : 1e-9;
        double hi = j + 1 < n ? ps[static_cast<std::size_t>(j) + 1] : 1.0 - 1e-9;
        auto [px, vx] = golden_max(f, lo, hi, 1e-9);
        local.push_back({vx, px, e1, e2});
    }
    std::sort(local.begin(), local.end(), better);
    std::vector<Candidate> kept;
    for (const auto& c : local) {
        bool dup = false;
        for (const auto& k : kept)
            if (std::fabs(k.p - c.p) <= 1e-5) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(c);
    }
    out.insert(out.end(), kept.begin(), kept.end());
}

double ln_mpz(const mpz_class& z) {
    if (z <= 0) throw std::invalid_argument("log of non-positive integer");
    signed long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(d) + static_cast<double>(e) * LN2;
}

mpz_class pow2z(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

mpz_class powz(unsigned long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

mpz_class binom_z(const mpz_class& n, unsigned long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

mpz_class binom_uz(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Numerator/denominator of the disjunct-style failure probability for
// m+1 random columns of height n: 1 - [2^(n(m+1)) - (m+1)(2^(m+1)-2)^n]
// over (m+1)! C(2^n, m+1).
void disjunct_pprime_parts(int n, int m, mpz_class& good, mpz_class& den) {
    if (n < 1 || n > 256) throw std::invalid_argument("n must lie in 1..256");
    if (m < 1 || m > 60) throw std::invalid_argument("m must lie in 1..60");
    if (pow2z(static_cast<unsigned long>(n)) < m + 1)
        throw std::invalid_argument("need 2^n >= m + 1 columns to draw from");
    good = pow2z(static_cast<unsigned long>(n) * (m + 1));
    mpz_class bad = pow2z(static_cast<unsigned long>(m) + 1) - 2;
    mpz_class badn;
    mpz_pow_ui(badn.get_mpz_t(), bad.get_mpz_t(), static_cast<unsigned long>(n));
    good -= (m + 1) * badn;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m) + 1);
    den = fact * binom_z(pow2z(static_cast<unsigned long>(n)), static_cast<unsigned long>(m) + 1);
}

// Largest N with e * P * [C(N, k) - C(N-k, k)] < 1 for a fixed event
// log-probability ln_p and block size k; 0 when even N = k fails. The
// condition is monotone in N, so gallop then bisect. Decisions are taken
// on the natural log of the left side; boundary margins for the sizes
// exposed here are orders of magnitude above double noise.
long long lll_max_items(double ln_p, int k) {
    if (!(ln_p < 0.0)) return 0;
    auto cond = [&](long long N) {
        mpz_class count = binom_uz(static_cast<unsigned long>(N), static_cast<unsigned long>(k));
        if (N - k >= k) count -= binom_uz(static_cast<unsigned long>(N - k), static_cast<unsigned long>(k));
        if (count <= 0) return true;
        return 1.0 + ln_p + ln_mpz(count) < 0.0;
    };
    long long lo = k;
    if (!cond(lo)) return 0;
    long long hi = lo * 2;
    const long long cap = 1ll << 61;
    while (cond(hi)) {
        lo = hi;
        if (hi > cap / 2) throw std::invalid_argument("search range exceeds supported size");
        hi *= 2;
    }
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        if (cond(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

double disjunct_asym_lnB(int m) { // ln of per-test growth base, saturation design
    return -std::log1p(-std::ldexp(1.0, -m)) / m;
}

double disjunct_asym_lnB_agt(int m) {
    return -std::log1p(-std::ldexp(1.0, -(m + 1))) / m;
}

double disjunct_asym_lnA(int m) {
    return (std::lgamma(static_cast<double>(m) + 1) - 2.0 * std::log(static_cast<double>(m) + 1) - 1.0) / m;
}

} // namespace

double alpha(int m, const Model& spec) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= m; ++i) best = std::min(best, mi_model(m, i, spec) / i);
    return best;
}

AlphaResult alpha_opt(int m, Model::Kind kind, bool noisy, double q) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (noisy && kind == Model::GGT) throw std::invalid_argument("no closed form for diluted threshold designs");
    if (noisy && !(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");

    std::vector<double> ps(GRID_POINTS);
    for (int j = 0; j < GRID_POINTS; ++j) ps[static_cast<std::size_t>(j)] = (j + 1) / (GRID_POINTS + 1.0);

    std::vector<Candidate> cands;
    if (kind == Model::GGT) {
        std::vector<std::pair<int, int>> pairs;
        for (int e1 = 0; e1 < m; ++e1)
            for (int e2 = e1 + 1; e2 < m; ++e2) pairs.emplace_back(e1, e2);
        std::vector<std::vector<double>> vals(pairs.size(), std::vector<double>(ps.size()));
        TailTables T;
        for (std::size_t j = 0; j < ps.size(); ++j) {
            T.build(m, ps[j]);
            for (std::size_t c = 0; c < pairs.size(); ++c)
                vals[c][j] = alpha_pair_tables(T, m, pairs[c].first, pairs[c].second);
        }
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            auto [e1, e2] = pairs[c];
            refine_maxima(ps, vals[c], [&](double p) { return alpha_pair(m, p, e1, e2); }, e1, e2, cands);
        }
    } else {
        Model base = kind == Model::AGT ? Model::agt(0.5) : Model::sgt(0.5);
        if (noisy) base = base.diluted(q);
        auto f = [&](double p) {
            Model s = base;
            s.p = p;
            return alpha(m, s);
        };
        std::vector<double> vals(ps.size());
        for (std::size_t j = 0; j < ps.size(); ++j) vals[j] = f(ps[j]);
        refine_maxima(ps, vals, f, -1, -1, cands);
    }

    if (cands.empty()) throw std::invalid_argument("no maximizer found");
    std::sort(cands.begin(), cands.end(), better);
    const Candidate best = cands.front();

    AlphaResult res;
    res.m = m;
    res.kind = kind;
    res.noisy = noisy;
    res.q = noisy ? q : 0.0;
    res.value = best.value;
    for (const auto& c : cands)
        if (c.value >= best.value - 1e-4) res.maximizers.push_back({c.p, c.eta1, c.eta2});
    std::sort(res.maximizers.begin(), res.maximizers.end(), [](const Maximizer& a, const Maximizer& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.eta1 != b.eta1) return a.eta1 < b.eta1;
        return a.eta2 < b.eta2;
    });
    res.per_i.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        if (kind == Model::GGT) {
            res.per_i[static_cast<std::size_t>(i) - 1] = mi_ggt(m, i, best.p, best.eta1, best.eta2);
        } else {
            Model s = kind == Model::AGT ? Model::agt(best.p) : Model::sgt(best.p);
            if (noisy) s = s.diluted(q);
            res.per_i[static_cast<std::size_t>(i) - 1] = mi_model(m, i, s);
        }
    }
    return res;
}

BoundReport sufficient_tests(long long N, int m, const Model& spec) {
    if (m < 1 || N <= m) throw std::invalid_argument("need N > m >= 1");
    double worst = 0.0;
    bool any = false;
    for (int i = 1; i <= m; ++i) {
        double info = mi_model(m, i, spec);
        if (!(info > 0.0)) throw std::invalid_argument("split carries no information");
        double num = log2_binom(N - m, i) + log2_binom(m, i);
        if (!std::isfinite(num)) continue;
        worst = std::max(worst, num / info);
        any = true;
    }
    if (!any) throw std::invalid_argument("no feasible split");
    BoundReport r;
    r.kind = "sufficient_n";
    r.exact = worst;
    r.integer_value = static_cast<long long>(std::floor(worst)) + 1; // bound is strict
    r.asymptotic = std::log2(static_cast<double>(N)) / alpha(m, spec);
    return r;
}

BoundReport necessary_tests(long long N, int m, const Model& spec) {
    if (m < 1 || N <= m) throw std::invalid_argument("need N > m >= 1");
    double worst = 0.0;
    for (int i = 1; i <= m; ++i) {
        double info = mi_model(m, i, spec);
        if (!(info > 0.0)) throw std::invalid_argument("split carries no information");
        worst = std::max(worst, log2_binom(N - m + i, i) / info);
    }
    BoundReport r;
    r.kind = "necessary_n";
    r.exact = worst;
    r.integer_value = static_cast<long long>(std::ceil(worst));
    r.asymptotic = std::log2(static_cast<double>(N)) / alpha(m, spec);
    return r;
}

BoundReport lll_disjunct_pprime(int n, int m) {
    mpz_class good, den;
    disjunct_pprime_parts(n, m, good, den);
    mpq_class prob(den - good, den);
    prob.canonicalize();
    BoundReport r;
    r.kind = "disjunct_pprime";
    r.exact = prob.get_d();
    r.exceeds_one = good < 0;
    r.asymptotic = (m + 1) * std::exp(n * std::log1p(-std::ldexp(1.0, -m)));
    return r;
}

BoundReport lll_disjunct_maxN(int n, int m) {
    if (n > 128) throw std::invalid_argument("n must lie in 1..128 for the size search");
    mpz_class good, den;
    disjunct_pprime_parts(n, m, good, den);
    BoundReport r;
    r.kind = "disjunct_maxN";
    if (good <= 0) {
        r.integer_value = 0; // failure probability at or above 1
        r.exceeds_one = good < 0;
    } else {
        mpz_class num = den - good;
        double ln_p = num <= 0 ? -std::numeric_limits<double>::infinity() : ln_mpz(num) - ln_mpz(den);
        r.integer_value = lll_max_items(ln_p, m + 1);
    }
    r.exact = static_cast<double>(r.integer_value);
    r.asymptotic = std::exp(disjunct_asym_lnA(m) + n * disjunct_asym_lnB(m));
    return r;
}

BoundReport lll_disjunct_maxN_agt(int n, int m) {
    if (n < 1 || n > 128) throw std::invalid_argument("n must lie in 1..128 for the size search");
    if (m < 1 || m > 60) throw std::invalid_argument("m must lie in 1..60");
    double ln_p = std::log(static_cast<double>(m) + 1) + n * std::log1p(-std::ldexp(1.0, -(m + 1)));
    BoundReport r;
    r.kind = "disjunct_maxN_agt";
    r.integer_value = lll_max_items(ln_p, m + 1);
    r.exact = static_cast<double>(r.integer_value);
    r.asymptotic = std::exp(disjunct_asym_lnA(m) + n * disjunct_asym_lnB_agt(m));
    return r;
}

double rate_ratio(int m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    // (m - log2(2^m - 1)) / (m+1 - log2(2^(m+1) - 1)) rewritten through
    // log1p(-2^-m); the direct form loses everything past m ~ 25.
    return std::log1p(-std::ldexp(1.0, -m)) / std::log1p(-std::ldexp(1.0, -(m + 1)));
}

BoundReport lll_separable_pdprime(int n) {
    if (n < 2 || n > 256) throw std::invalid_argument("n must lie in 2..256");
    mpz_class num = 3 * powz(6, static_cast<unsigned long>(n)) - 6 * powz(4, static_cast<unsigned long>(n)) +
                    3 * powz(2, static_cast<unsigned long>(n));
    mpz_class w = pow2z(static_cast<unsigned long>(n));
    mpz_class den = w * (w - 1) * (w - 2) * (w - 3);
    mpq_class prob(num, den);
    prob.canonicalize();
    BoundReport r;
    r.kind = "separable_pdprime";
    r.exact = prob.get_d();
    r.exceeds_one = num > den;
    r.asymptotic = 3.0 * std::pow(3.0 / 8.0, n);
    return r;
}

BoundReport lll_separable_maxN(int n) {
    if (n < 2 || n > 128) throw std::invalid_argument("n must lie in 2..128 for the size search");
    mpz_class num = 3 * powz(6, static_cast<unsigned long>(n)) - 6 * powz(4, static_cast<unsigned long>(n)) +
                    3 * powz(2, static_cast<unsigned long>(n));
    mpz_class w = pow2z(static_cast<unsigned long>(n));
    mpz_class den = w * (w - 1) * (w - 2) * (w - 3);
    BoundReport r;
    r.kind = "separable_maxN";
    if (num >= den) {
        r.integer_value = 0;
        r.exceeds_one = num > den;
    } else {
        r.integer_value = lll_max_items(ln_mpz(num) - ln_mpz(den), 4);
    }
    r.exact = static_cast<double>(r.integer_value);
    r.asymptotic = std::exp(-(1.0 + LN2) / 3.0 + n * std::log(8.0 / 3.0) / 3.0);
    return r;
}

BoundReport gv_estimate(int r) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    BoundReport b;
    b.kind = "gv_estimate";
    b.exact = std::cbrt(6.0) * std::exp2(static_cast<double>(r) / 3.0);
    b.asymptotic = b.exact;
    b.integer_value = static_cast<long long>(std::floor(b.exact));
    return b;
}

BoundReport sphere_estimate(int r) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    BoundReport b;
    b.kind = "sphere_estimate";
    b.exact = std::pow(24.0, 0.25) * std::exp2(static_cast<double>(r) / 4.0);
    b.asymptotic = b.exact;
    b.integer_value = static_cast<long long>(std::floor(b.exact));
    return b;
}

bool gv_exact_check(long long n, int r) {
    if (n < 1 || r < 1 || r > 256) throw std::invalid_argument("need n >= 1 and r in 1..256");
    mpz_class nn(static_cast<long>(n));
    mpz_class lhs = nn * (nn * nn - 3 * nn + 8);
    mpz_class rhs = 6 * pow2z(static_cast<unsigned long>(r));
    return lhs < rhs;
}

} // namespace sgt
