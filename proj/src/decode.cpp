#include "decode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sgt {

namespace {

constexpr double NEG_INF = -std::numeric_limits<double>::infinity();
constexpr double TIE_TOL = 1e-12;

void model_thresholds(const Model& model, int m, int& eta1, int& eta2) {
    switch (model.kind) {
        case Model::AGT: eta1 = 0; eta2 = 0; break;
        case Model::SGT: eta1 = 0; eta2 = m - 1; break;
        case Model::GGT:
            eta1 = model.eta1;
            eta2 = model.eta2;
            if (eta1 < 0 || eta1 > eta2) throw std::invalid_argument("thresholds must satisfy 0 <= eta1 <= eta2");
            break;
        default: throw std::invalid_argument("unknown model kind");
    }
}

// Visit subsets of {0..N-1} of size 1..m in size-then-lex order until the
// visitor returns false.
template <class F>
void for_each_subset(int N, int m, F visit) {
    std::vector<int> idx;
    for (int s = 1; s <= m && s <= N; ++s) {
        idx.resize(static_cast<std::size_t>(s));
        for (int r = 0; r < s; ++r) idx[static_cast<std::size_t>(r)] = r;
        for (;;) {
            if (!visit(idx)) return;
            int r = s - 1;
            while (r >= 0 && idx[static_cast<std::size_t>(r)] == N - s + r) --r;
            if (r < 0) break;
            ++idx[static_cast<std::size_t>(r)];
            for (int t = r + 1; t < s; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t) - 1] + 1;
        }
    }
}

double candidate_count(int N, int m) {
    double total = 0.0, c = 1.0;
    for (int s = 1; s <= m && s <= N; ++s) {
        c = c * (N - s + 1) / s;
        total += c;
    }
    return total;
}

} // namespace

std::vector<int> decode_inclusion(const Matrix& code, const Word& y, int m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
    if (static_cast<int>(y.size()) != code.n) throw std::invalid_argument("observation length differs from test count");
    std::vector<int> items;
    for (int j = 0; j < code.N; ++j)
        if (is_included(code.column(j), y)) items.push_back(j);
    return items;
}

std::vector<int> decode_exhaustive(const Matrix& code, const Word& y, int m,
                                   const Model& channel, bool allow_big) {
    if (m < 1 || m > code.N) throw std::invalid_argument("m must lie in 1..N");
    if (static_cast<int>(y.size()) != code.n) throw std::invalid_argument("observation length differs from test count");
    for (Symbol s : y)
        if (s > 2) throw std::invalid_argument("symbol out of range");
    if (!allow_big && candidate_count(code.N, m) > 2097152.0)
        throw std::invalid_argument("refusing more than 2^21 candidate sets without allow_big");

    int eta1 = 0, eta2 = 0;
    const bool sgt_kind = channel.kind == Model::SGT;
    if (!sgt_kind) model_thresholds(channel, m, eta1, eta2);

    auto clean_symbol = [&](int k, int s) -> Symbol {
        int lo = eta1, hi = eta2;
        if (sgt_kind) {
            lo = 0;
            hi = s - 1; // saturation threshold tracks the candidate size
        }
        return k <= lo ? 0 : (k > hi ? 1 : 2);
    };

    if (!channel.noisy) {
        std::vector<int> found;
        int matches = 0;
        for_each_subset(code.N, m, [&](const std::vector<int>& cand) {
            const int s = static_cast<int>(cand.size());
            for (int t = 0; t < code.n; ++t) {
                int k = 0;
                for (int j : cand) k += code.at(t, j);
                if (clean_symbol(k, s) != y[static_cast<std::size_t>(t)]) return true;
            }
            if (++matches == 1) found = cand;
            return matches < 2;
        });
        if (matches != 1) throw AmbiguityError(matches == 0 ? "no candidate set matches the observation"
                                                            : "several candidate sets match the observation");
        return found;
    }

    if (!(channel.q >= 0.0 && channel.q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");
    double logch[3][3];
    for (auto& row : logch)
        for (double& v : row) v = NEG_INF;
    logch[0][0] = std::log(1.0 - channel.q);
    logch[0][2] = std::log(channel.q);
    logch[1][1] = std::log(channel.q);
    logch[1][2] = std::log(1.0 - channel.q);
    logch[2][2] = 0.0;

    double best = NEG_INF, second = NEG_INF;
    std::vector<int> found;
    for_each_subset(code.N, m, [&](const std::vector<int>& cand) {
        const int s = static_cast<int>(cand.size());
        double ll = 0.0;
        for (int t = 0; t < code.n; ++t) {
            int k = 0;
            for (int j : cand) k += code.at(t, j);
            ll += logch[clean_symbol(k, s)][y[static_cast<std::size_t>(t)]];
            if (!(ll >= best - TIE_TOL)) return true; // cannot reach a tie any more
        }
        if (ll > best) {
            second = best;
            best = ll;
            found = cand;
        } else {
            second = std::max(second, ll);
        }
        return true;
    });
    if (best == NEG_INF) throw AmbiguityError("no candidate set has positive likelihood");
    if (second >= best - TIE_TOL) throw AmbiguityError("likelihood tie between candidate sets");
    return found;
}

TrialReport run_trials(const TrialConfig& cfg) {
    int N = cfg.N, n = cfg.n;
    if (cfg.design) {
        N = cfg.design->N;
        n = cfg.design->n;
    }
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (cfg.m < 1 || cfg.m >= N) throw std::invalid_argument("need 1 <= m < N");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (!(cfg.model.p >= 0.0 && cfg.model.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    if (cfg.model.noisy && !(cfg.model.q >= 0.0 && cfg.model.q <= 1.0))
        throw std::invalid_argument("q must lie in [0, 1]");
    int eta1 = 0, eta2 = 0;
    model_thresholds(cfg.model, cfg.m, eta1, eta2);

    TrialReport rep;
    rep.trials = cfg.trials;
    Matrix design = cfg.design ? *cfg.design : (n > 0 ? make_matrix(n, N) : Matrix{});
    std::vector<int> pool(static_cast<std::size_t>(N));
    for (long long trial = 0; trial < cfg.trials; ++trial) {
        std::seed_seq ss{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                         static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(static_cast<std::uint64_t>(trial) >> 32)};
        std::mt19937_64 rng(ss);
        if (n == 0) {
            ++rep.ambiguities; // nothing measured, nothing decodable
            continue;
        }
        if (!cfg.design)
            for (int t = 0; t < n; ++t)
                for (int j = 0; j < N; ++j) design.at(t, j) = bernoulli(rng, cfg.model.p) ? 1 : 0;
        for (int j = 0; j < N; ++j) pool[static_cast<std::size_t>(j)] = j;
        for (int r = 0; r < cfg.m; ++r) {
            auto pick = r + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(N - r)));
            std::swap(pool[static_cast<std::size_t>(r)], pool[static_cast<std::size_t>(pick)]);
        }
        std::vector<int> defectives(pool.begin(), pool.begin() + cfg.m);
        std::sort(defectives.begin(), defectives.end());

        Word y = ggt_observation(design, defectives, eta1, eta2);
        if (cfg.model.noisy) y = apply_noise(y, cfg.model.q, rng);
        try {
            std::vector<int> guess = decode_exhaustive(design, y, cfg.m, cfg.model);
            if (guess == defectives) ++rep.successes;
            else ++rep.wrong_sets;
        } catch (const AmbiguityError&) {
            ++rep.ambiguities;
        }
    }
    rep.error_rate = static_cast<double>(rep.trials - rep.successes) / static_cast<double>(rep.trials);
    return rep;
}

} // namespace sgt
