#pragma once
// Decoders for pooled observations and a Monte Carlo harness for their
// end-to-end error rate.

#include "info.hpp"
#include "ternary.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sgt {

// Raised when an observation does not determine a unique defective set.
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Items whose column is included in y. Equals the true defective set
// whenever the code is m-disjunct and at most m_max <= m items are
// defective; may overshoot otherwise, the caller compares against m_max.
std::vector<int> decode_inclusion(const Matrix& code, const Word& y, int m_max);

// Search all defective sets of size 1..m. Noise-free channels require a
// unique exactly-consistent candidate; diluted channels pick the maximum
// likelihood candidate under the outcome channel (0 -> {0, 2}, 1 -> {1, 2},
// 2 -> {2}), with likelihood ties within 1e-12 reported as ambiguous.
// Guarded to sum_{s<=m} C(N,s) <= 2^21 candidates unless allow_big.
std::vector<int> decode_exhaustive(const Matrix& code, const Word& y, int m,
                                   const Model& channel, bool allow_big = false);

struct TrialConfig {
    int N = 0;                      // items (taken from design when fixed)
    int m = 0;                      // defectives drawn each trial
    int n = 0;                      // tests (0 allowed: every trial is blind)
    Model model;                    // design density p, family, dilution
    long long trials = 0;
    std::uint64_t seed = 0;
    const Matrix* design = nullptr; // fixed design; fresh Bernoulli(p) draw per trial when null
};

struct TrialReport {
    long long trials = 0;
    long long successes = 0;
    long long ambiguities = 0;
    long long wrong_sets = 0;
    double error_rate = 1.0; // (trials - successes) / trials
};

// Per trial: draw the design (row-major), then a uniform size-m defective
// set, then dilution noise, then decode exhaustively; ambiguity counts as
// an error. Trial t uses a fresh engine seeded from (seed, t), so reports
// are reproducible and trials are order-independent.
TrialReport run_trials(const TrialConfig& cfg);

} // namespace sgt
