#pragma once
// Rates, optimal designs, and existence bounds.
//
// alpha is the per-defective information rate of a design family: the
// worst case over the split index i of mutual information per unknown
// item. alpha_opt maximizes it over the incidence probability p (and the
// threshold pair for the two-threshold family). The lll_* routines bound
// code sizes through the local lemma with exact rational event
// probabilities; *_estimate give constructive size estimates.

#include "info.hpp"

#include <string>
#include <vector>

namespace sgt {

// min over i = 1..m of mi_model(m, i, spec) / i. Requires every split to
// carry positive information.
double alpha(int m, const Model& spec);

struct Maximizer {
    double p = 0.0;
    int eta1 = -1; // -1 when the family has no thresholds
    int eta2 = -1;
};

struct AlphaResult {
    int m = 0;
    Model::Kind kind = Model::SGT;
    bool noisy = false;
    double q = 0.0;
    double value = 0.0;                // alpha at the best maximizer
    std::vector<Maximizer> maximizers; // all optima within 1e-4 of value,
                                       // sorted by (p, eta1, eta2)
    std::vector<double> per_i;         // mi at the best maximizer, index i-1
};

// Maximize alpha over p in (0, 1) on a 2001-point grid with golden-section
// refinement of every local maximum (final bracket below 1e-8 in p). For
// the GGT family every threshold pair 0 <= eta1 < eta2 <= m-1 is searched
// and maximizers from distinct pairs are reported separately. Dilution q
// applies to AGT/SGT only.
AlphaResult alpha_opt(int m, Model::Kind kind, bool noisy = false, double q = 0.0);

struct BoundReport {
    std::string kind;
    double exact = 0.0;
    double asymptotic = 0.0;
    long long integer_value = 0; // rounded test count / largest N, when meaningful
    bool exceeds_one = false;    // probability above 1 is reported, not clamped
};

// Test-count bounds for identifying up to m defectives among N items.
// sufficient: smallest n with n > max_i log2(C(N-m,i) C(m,i)) / I(i).
// necessary:  smallest n with n >= max_i log2(C(N-m+i,i)) / I(i).
// Both report log2(N) / alpha(m, spec) as the asymptotic counterpart.
BoundReport sufficient_tests(long long N, int m, const Model& spec);
BoundReport necessary_tests(long long N, int m, const Model& spec);

// Exact probability that m+1 random columns of height n fail the cover
// condition, as a rational, next to its asymptotic form (m+1)(1-2^-m)^n.
BoundReport lll_disjunct_pprime(int n, int m);

// Largest N such that e * p' * [C(N,m+1) - C(N-(m+1),m+1)] < 1, the local
// lemma condition for an n-row m-disjunct-style design to exist; the AGT
// variant substitutes the OR-design event bound (m+1)(1-2^-(m+1))^n.
// Asymptotic counterpart A * B^n with the matching base.
BoundReport lll_disjunct_maxN(int n, int m);
BoundReport lll_disjunct_maxN_agt(int n, int m);

// (m - log2(2^m - 1)) / (m+1 - log2(2^(m+1) - 1)), evaluated through
// log1p so large m keeps full precision.
double rate_ratio(int m);

// Exact probability that two disjoint random pairs of columns collide in
// ternary sum, with asymptotic 3(3/8)^n, and the matching largest-N search
// e * p'' * [C(N,4) - C(N-4,4)] < 1 against A' * B'^n.
BoundReport lll_separable_pdprime(int n);
BoundReport lll_separable_maxN(int n);

// Constructive size estimates for parity-check style designs with r rows:
// gv 6^(1/3) 2^(r/3), sphere 24^(1/4) 2^(r/4); and the exact check that
// n columns fit, n(n^2 - 3n + 8)/6 < 2^r.
BoundReport gv_estimate(int r);
BoundReport sphere_estimate(int r);
bool gv_exact_check(long long n, int r);

} // namespace sgt
