#pragma once
// Parity-check style constructions and combinatorial code verification.
//
// Columns of a binary matrix are item signatures. verify_disjunct checks
// that ternary sums of small sets only cover the columns they contain;
// verify_separable checks that ternary sums of small sets are pairwise
// distinct. Both walk subsets in size-then-lex order and report the first
// violation, so failures are reproducible byte for byte.

#include "ternary.hpp"

#include <vector>

namespace sgt {

// Carryless multiplication in GF(2^k) reduced by a fixed primitive
// polynomial, k = 2..10.
int gf_mul(int a, int b, int k);
int gf_primitive_poly(int k);

// 2k x (2^k - 1) parity-check style design: column j stacks the field
// elements alpha^j (rows 0..k-1, low bit first) and alpha^(3j) (rows
// k..2k-1).
Matrix bch_parity_check(int k);

// True when no 4 or fewer columns XOR to zero: columns are nonzero and
// pairwise distinct, no pair XOR equals a column, and pair XORs are
// pairwise distinct across disjoint pairs.
bool min_distance_at_least_5(const Matrix& H);

struct VerifyResult {
    bool ok = true;
    std::vector<int> set_a; // first witness pair when ok is false
    std::vector<int> set_b;
};

// m-disjunct check: for subsets S, T of at most m columns, the sum of S
// included in the sum of T forces S to be a subset of T. Witness order:
// S outer, T inner, each in size-then-lex order. Guarded to N <= 20 and
// m <= 3 unless allow_big.
VerifyResult verify_disjunct(const Matrix& code, int m, bool allow_big = false);

// m-separable check: sums of distinct subsets of size 1..m are distinct.
// Witness is the earliest colliding pair in size-then-lex order. Guarded
// to N <= 40 and m <= 2 unless allow_big.
VerifyResult verify_separable(const Matrix& code, int m, bool allow_big = false);

} // namespace sgt
