#include "codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <string>

namespace sgt {

namespace {

// Primitive polynomials over GF(2), one per degree, low-degree taps.
constexpr int PRIM[11] = {0, 0, 0b111, 0b1011, 0b10011, 0b100101,
                          0b1000011, 0b10001001, 0b100011101, 0b1000010001,
                          0b10000001001};

void check_field(int k) {
    if (k < 2 || k > 10) throw std::invalid_argument("field degree must lie in 2..10");
}

// All subsets of {0..N-1} with size 1..m, size-then-lex order.
std::vector<std::vector<int>> subsets_upto(int N, int m) {
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= m; ++s) {
        std::vector<int> idx(static_cast<std::size_t>(s));
        for (int r = 0; r < s; ++r) idx[static_cast<std::size_t>(r)] = r;
        for (;;) {
            out.push_back(idx);
            int r = s - 1;
            while (r >= 0 && idx[static_cast<std::size_t>(r)] == N - s + r) --r;
            if (r < 0) break;
            ++idx[static_cast<std::size_t>(r)];
            for (int t = r + 1; t < s; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t) - 1] + 1;
        }
    }
    return out;
}

std::vector<std::uint64_t> pack_column(const Matrix& H, int j) {
    std::vector<std::uint64_t> w(static_cast<std::size_t>(H.n + 63) / 64, 0);
    for (int t = 0; t < H.n; ++t)
        if (H.at(t, j)) w[static_cast<std::size_t>(t) / 64] |= 1ull << (t % 64);
    return w;
}

} // namespace

int gf_primitive_poly(int k) {
    check_field(k);
    return PRIM[k];
}

int gf_mul(int a, int b, int k) {
    check_field(k);
    if (a < 0 || b < 0 || a >= (1 << k) || b >= (1 << k))
        throw std::invalid_argument("field element out of range");
    int r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1 << k)) a ^= PRIM[k];
    }
    return r;
}

Matrix bch_parity_check(int k) {
    check_field(k);
    const int N = (1 << k) - 1;
    Matrix H = make_matrix(2 * k, N);
    int a = 1; // alpha^j, starting at j = 0
    for (int j = 0; j < N; ++j) {
        int b = gf_mul(gf_mul(a, a, k), a, k); // alpha^(3j)
        for (int r = 0; r < k; ++r) {
            H.at(r, j) = static_cast<std::uint8_t>((a >> r) & 1);
            H.at(k + r, j) = static_cast<std::uint8_t>((b >> r) & 1);
        }
        a = gf_mul(a, 2, k);
    }
    return H;
}

bool min_distance_at_least_5(const Matrix& H) {
    const std::vector<std::uint64_t> zero(static_cast<std::size_t>(H.n + 63) / 64, 0);
    std::vector<std::vector<std::uint64_t>> cols;
    cols.reserve(static_cast<std::size_t>(H.N));
    std::set<std::vector<std::uint64_t>> singles;
    for (int j = 0; j < H.N; ++j) {
        auto c = pack_column(H, j);
        if (c == zero) return false;            // weight-1 dependency
        if (!singles.insert(c).second) return false; // weight-2
        cols.push_back(std::move(c));
    }
    std::set<std::vector<std::uint64_t>> pair_xors;
    std::vector<std::uint64_t> x(zero.size());
    for (int a = 0; a < H.N; ++a)
        for (int b = a + 1; b < H.N; ++b) {
            for (std::size_t w = 0; w < x.size(); ++w) x[w] = cols[static_cast<std::size_t>(a)][w] ^ cols[static_cast<std::size_t>(b)][w];
            if (singles.count(x)) return false;      // weight-3
            if (!pair_xors.insert(x).second) return false; // weight-4
        }
    return true;
}

VerifyResult verify_disjunct(const Matrix& code, int m, bool allow_big) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (!allow_big && (code.N > 20 || m > 3))
        throw std::invalid_argument("refusing N > 20 or m > 3 without allow_big");
    auto subsets = subsets_upto(code.N, m);
    std::vector<Word> sums;
    sums.reserve(subsets.size());
    for (const auto& s : subsets) sums.push_back(observation(code, s));
    for (std::size_t si = 0; si < subsets.size(); ++si)
        for (std::size_t ti = 0; ti < subsets.size(); ++ti) {
            if (!is_included(sums[si], sums[ti])) continue;
            if (std::includes(subsets[ti].begin(), subsets[ti].end(),
                              subsets[si].begin(), subsets[si].end()))
                continue;
            return {false, subsets[si], subsets[ti]};
        }
    return {};
}

VerifyResult verify_separable(const Matrix& code, int m, bool allow_big) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (!allow_big && (code.N > 40 || m > 2))
        throw std::invalid_argument("refusing N > 40 or m > 2 without allow_big");
    auto subsets = subsets_upto(code.N, m);
    std::unordered_map<std::string, std::size_t> seen;
    seen.reserve(subsets.size() * 2);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        auto key = format_word(observation(code, subsets[i]));
        auto [it, fresh] = seen.emplace(std::move(key), i);
        if (!fresh) return {false, subsets[it->second], subsets[i]};
    }
    return {};
}

} // namespace sgt
