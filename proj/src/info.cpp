#include "info.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace sgt {

namespace {

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

double clamp_mass(double x, const char* what) {
    if (x < -1e-12 || x > 1.0 + 1e-12) throw std::invalid_argument(what);
    return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
}

void check_mi_args(int m, int i, double p) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (i < 1 || i > m) throw std::invalid_argument("i must lie in 1..m");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

void check_q(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");
}

// Binomial(i, p) pmf, prefix and suffix tail sums. The suffix is summed
// directly from its own terms rather than as 1 - prefix, so tiny tails
// near the thresholds are not lost to cancellation.
struct BinTable {
    std::vector<double> pmf;

    BinTable(int i, double p) : pmf(static_cast<std::size_t>(i) + 1) {
        double q1 = 1.0 - p;
        for (int j = 0; j <= i; ++j) {
            double term = 1.0;
            for (int r = 0; r < j; ++r) term *= p * static_cast<double>(i - r) / (r + 1);
            for (int r = 0; r < i - j; ++r) term *= q1;
            pmf[static_cast<std::size_t>(j)] = term;
        }
    }

    double prefix(int hi) const { // P(J <= hi)
        if (hi < 0) return 0.0;
        double s = 0.0;
        for (int j = 0; j <= hi && j < static_cast<int>(pmf.size()); ++j) s += pmf[static_cast<std::size_t>(j)];
        return s > 1.0 ? 1.0 : s;
    }

    double suffix(int lo) const { // P(J >= lo)
        if (lo <= 0) return 1.0;
        double s = 0.0;
        for (int j = lo; j < static_cast<int>(pmf.size()); ++j) s += pmf[static_cast<std::size_t>(j)];
        return s > 1.0 ? 1.0 : s;
    }
};

} // namespace

double entropy2(double z) {
    z = clamp_mass(z, "entropy2 argument outside [0, 1]");
    return -xlog2x(z) - xlog2x(1.0 - z);
}

double entropy3(double z, double g) {
    z = clamp_mass(z, "entropy3 argument outside [0, 1]");
    g = clamp_mass(g, "entropy3 argument outside [0, 1]");
    double rest = 1.0 - z - g;
    rest = clamp_mass(rest, "entropy3 masses exceed 1");
    return -xlog2x(z) - xlog2x(g) - xlog2x(rest);
}

Model Model::agt(double p) {
    Model m;
    m.kind = AGT;
    m.p = p;
    return m;
}

Model Model::sgt(double p) {
    Model m;
    m.kind = SGT;
    m.p = p;
    return m;
}

Model Model::ggt(double p, int eta1, int eta2) {
    if (eta1 < 0 || eta1 > eta2)
        throw std::invalid_argument("thresholds must satisfy 0 <= eta1 <= eta2");
    Model m;
    m.kind = GGT;
    m.p = p;
    m.eta1 = eta1;
    m.eta2 = eta2;
    return m;
}

Model Model::diluted(double q) const {
    Model m = *this;
    m.noisy = true;
    m.q = q;
    return m;
}

double mi_agt(int m, int i, double p) {
    check_mi_args(m, i, p);
    double u = 1.0 - p;
    return std::pow(u, m - i) * entropy2(std::pow(u, i));
}

double mi_sgt(int m, int i, double p) {
    check_mi_args(m, i, p);
    double u = 1.0 - p;
    if (i == m) return entropy3(std::pow(p, m), std::pow(u, m));
    return std::pow(u, m - i) * entropy2(std::pow(u, i)) +
           std::pow(p, m - i) * entropy2(std::pow(p, i));
}

double mi_agt_noisy(int m, int i, double p, double q) {
    check_mi_args(m, i, p);
    check_q(q);
    double u = 1.0 - p;
    return std::pow(u, m - i) * entropy2(std::pow(u, i) * (1.0 - q)) -
           std::pow(u, m) * entropy2(q);
}

double mi_sgt_noisy(int m, int i, double p, double q) {
    check_mi_args(m, i, p);
    check_q(q);
    double u = 1.0 - p;
    double anchor = (std::pow(u, m) + std::pow(p, m)) * entropy2(q);
    if (i == m) return entropy3(std::pow(p, m) * q, std::pow(u, m) * (1.0 - q)) - anchor;
    return std::pow(u, m - i) * entropy2(std::pow(u, i) * (1.0 - q)) +
           std::pow(p, m - i) * entropy2(std::pow(p, i) * q) - anchor;
}

double mi_ggt(int m, int i, double p, int eta1, int eta2) {
    check_mi_args(m, i, p);
    if (eta1 < 0 || eta1 > eta2) throw std::invalid_argument("thresholds must satisfy 0 <= eta1 <= eta2");
    if (eta2 >= m) throw std::invalid_argument("eta2 must be below m");
    BinTable known(m - i, p);   // defectives outside the queried group
    BinTable queried(i, p);     // defectives inside it
    double total = 0.0;
    int kmax = eta1 < m - i ? eta1 : m - i;
    for (int k = 0; k <= kmax; ++k) {
        double p1 = queried.prefix(eta1 - k);
        double p2 = queried.suffix(eta2 - k + 1);
        total += known.pmf[static_cast<std::size_t>(k)] * entropy3(p1, p2);
    }
    int kmax2 = eta2 < m - i ? eta2 : m - i;
    for (int k = eta1 + 1; k <= kmax2; ++k) {
        double p2 = queried.suffix(eta2 - k + 1);
        total += known.pmf[static_cast<std::size_t>(k)] * entropy2(p2);
    }
    return total;
}

double mi_model(int m, int i, const Model& spec) {
    switch (spec.kind) {
        case Model::AGT:
            return spec.noisy ? mi_agt_noisy(m, i, spec.p, spec.q) : mi_agt(m, i, spec.p);
        case Model::SGT:
            return spec.noisy ? mi_sgt_noisy(m, i, spec.p, spec.q) : mi_sgt(m, i, spec.p);
        case Model::GGT:
            if (spec.noisy) throw std::invalid_argument("no closed form for diluted threshold designs");
            return mi_ggt(m, i, spec.p, spec.eta1, spec.eta2);
    }
    throw std::invalid_argument("unknown model kind");
}

double mi_oracle(int m, int i, const Model& spec) {
    check_mi_args(m, i, spec.p);
    if (spec.noisy) check_q(spec.q);
    if (m > 24) throw std::invalid_argument("mi_oracle enumeration limited to m <= 24");
    int eta1, eta2;
    switch (spec.kind) {
        case Model::AGT: eta1 = 0; eta2 = 0; break;
        case Model::SGT: eta1 = 0; eta2 = m - 1; break;
        case Model::GGT:
            eta1 = spec.eta1;
            eta2 = spec.eta2;
            if (eta1 < 0 || eta1 > eta2) throw std::invalid_argument("thresholds must satisfy 0 <= eta1 <= eta2");
            break;
        default: throw std::invalid_argument("unknown model kind");
    }

    // Outcome channel rows: row[s][y] = P(observed y | clean symbol s).
    // Clean AGT outcomes are binary and suffer false alarms only; ternary
    // outcomes dilute toward the middle symbol.
    double ch[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    if (spec.noisy) {
        double q = spec.q;
        if (spec.kind == Model::AGT) {
            ch[0][0] = 1.0 - q; ch[0][1] = q;       ch[0][2] = 0.0;
            ch[1][0] = 0.0;     ch[1][1] = 1.0;     ch[1][2] = 0.0;
        } else {
            ch[0][0] = 1.0 - q; ch[0][1] = 0.0;     ch[0][2] = q;
            ch[1][0] = 0.0;     ch[1][1] = q;       ch[1][2] = 1.0 - q;
        }
    }
    double row_entropy[3];
    for (int s = 0; s < 3; ++s)
        row_entropy[s] = -xlog2x(ch[s][0]) - xlog2x(ch[s][1]) - xlog2x(ch[s][2]);

    auto pattern_prob = [&](std::uint32_t bits, int len) {
        int ones = std::popcount(bits);
        return std::pow(spec.p, ones) * std::pow(1.0 - spec.p, len - ones);
    };
    auto symbol_of = [&](int k) { return k <= eta1 ? 0 : (k > eta2 ? 1 : 2); };

    const int out = m - i;
    double h_given_known = 0.0; // H(y | known part)
    double h_given_all = 0.0;   // H(y | all incidences)
    for (std::uint32_t w2 = 0; w2 < (1u << out); ++w2) {
        double pw2 = pattern_prob(w2, out);
        int k2 = std::popcount(w2);
        double dist[3] = {0.0, 0.0, 0.0};
        for (std::uint32_t w1 = 0; w1 < (1u << i); ++w1) {
            double pw1 = pattern_prob(w1, i);
            int s = symbol_of(k2 + std::popcount(w1));
            for (int y = 0; y < 3; ++y) dist[y] += pw1 * ch[s][y];
            h_given_all += pw2 * pw1 * row_entropy[s];
        }
        h_given_known += pw2 * (-xlog2x(dist[0]) - xlog2x(dist[1]) - xlog2x(dist[2]));
    }
    return h_given_known - h_given_all;
}

} // namespace sgt
