#pragma once
// Ternary outcome algebra, code matrices, and pooled observations.
//
// Symbols: 0 (negative), 1 (saturated positive), 2 (intermediate).
// The sum of two outcomes is 0 only for 0+0, 1 only for 1+1, and 2
// otherwise, so mixing any disagreement lands in the middle symbol.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sgt {

using Symbol = std::uint8_t; // 0, 1 or 2
using Word = std::vector<Symbol>;

Symbol tern_add(Symbol a, Symbol b);

// Componentwise fold of one or more equal-length words. Empty input or
// ragged lengths are rejected.
Word word_sum(const std::vector<Word>& words);

// y is included in x when x + y == x componentwise.
bool is_included(const Word& y, const Word& x);

// Text form: one character per test, '0'/'1'/'2', first test first.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// Binary n x N measurement matrix, rows = tests, columns = items.
struct Matrix {
    int n = 0;
    int N = 0;
    std::vector<std::uint8_t> a; // row-major, entries 0/1

    std::uint8_t at(int t, int j) const { return a[static_cast<std::size_t>(t) * N + j]; }
    std::uint8_t& at(int t, int j) { return a[static_cast<std::size_t>(t) * N + j]; }
    Word column(int j) const;
};

Matrix make_matrix(int n, int N);

// Text form: n lines of N characters '0'/'1'. Ragged or empty input is
// rejected.
Matrix load_matrix(const std::string& text);
std::string save_matrix(const Matrix& code);

// Noise-free pooled outcome of a defective set: the ternary sum of the
// selected columns (binary columns read as words over {0,1}).
// defectives must be non-empty, in range and duplicate-free.
Word observation(const Matrix& code, const std::vector<int>& defectives);

// Threshold variant: with k defective items in a test, the outcome is 0
// when k <= eta1, 1 when k > eta2, 2 otherwise. Requires 0 <= eta1 <= eta2.
// (eta1, eta2) = (0, |D|-1) reproduces observation(); (0, 0) is the
// classical OR design read into {0, 1}.
Word ggt_observation(const Matrix& code, const std::vector<int>& defectives,
                     int eta1, int eta2);

// Dilution noise: each test draws z ~ Bernoulli(q) and the outcome becomes
// tern_add(y_t, z_t). A 0 flips to 2 with probability q, a 1 drops to 2
// with probability 1 - q, a 2 stays put.
Word apply_noise(const Word& y, double q, std::mt19937_64& rng);

// Portable draws (fixed consumption: one engine call per draw, rejection
// loop for bounded ints) so seeded runs reproduce across platforms.
bool bernoulli(std::mt19937_64& rng, double q);
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

} // namespace sgt
