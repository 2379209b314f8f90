#pragma once
// Per-test mutual information for pooled designs with i.i.d. Bernoulli(p)
// incidence, in bits.
//
// Setting: one test, m defective items, the decoder already knows the
// incidence of m - i of them and learns about the remaining i from the
// outcome. Closed forms cover the OR design (binary outcome), the
// saturation design (ternary outcome), their diluted variants, and the
// two-threshold family; mi_oracle recomputes any of them by enumerating
// all 2^m incidence patterns, as an independent cross-check.

#include <vector>

namespace sgt {

// -sum x log2 x over the given masses, with 0 log 0 = 0.
double entropy2(double z);            // masses z, 1-z
double entropy3(double z, double g);  // masses z, g, 1-z-g

struct Model {
    enum Kind { AGT = 0, SGT = 1, GGT = 2 };
    Kind kind = SGT;
    double p = 0.5;        // incidence probability
    bool noisy = false;
    double q = 0.0;        // dilution parameter, used when noisy
    int eta1 = 0;          // GGT thresholds, ignored otherwise
    int eta2 = 0;

    static Model agt(double p);
    static Model sgt(double p);
    static Model ggt(double p, int eta1, int eta2);
    Model diluted(double q) const; // same design, noisy outcome channel
};

// Closed forms. Preconditions: m >= 1, 1 <= i <= m, p in [0, 1],
// q in [0, 1], 0 <= eta1 <= eta2.
double mi_agt(int m, int i, double p);
double mi_sgt(int m, int i, double p);
double mi_agt_noisy(int m, int i, double p, double q);
double mi_sgt_noisy(int m, int i, double p, double q);
double mi_ggt(int m, int i, double p, int eta1, int eta2);

// Dispatch on a model description.
double mi_model(int m, int i, const Model& spec);

// Brute-force evaluation of the same quantity by summing over all 2^m
// incidence patterns and pushing outcomes through the model's channel.
double mi_oracle(int m, int i, const Model& spec);

} // namespace sgt
