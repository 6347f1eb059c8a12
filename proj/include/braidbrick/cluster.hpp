#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "braidbrick/braid.hpp"
#include "braidbrick/quiver.hpp"

namespace braidbrick {

using Rational = boost::multiprecision::cpp_rational;

// Exchange matrix with an exact positive rational point and c-vectors
// (columns of C). Fresh seeds start at (1,...,1) with C = identity.
struct Seed {
    ExchangeMatrix B;
    std::vector<Rational> x;
    std::vector<std::vector<int>> C;
};

Seed unit_seed(const ExchangeMatrix& B);

// x'_k = (prod_{b_ik>0} x_i^{b_ik} + prod_{b_ik<0} x_i^{-b_ik}) / x_k,
// B and C mutate by the matrix rule. Every C column must stay
// sign-coherent; a violation throws (it would be an implementation bug).
Seed seed_mutate(const Seed& s, int k);

// The maximal green order for an acyclic B: sinks first (reverse
// topological order). Throws on a directed cycle.
std::vector<int> dt_sequence(const ExchangeMatrix& B);

// true iff every mutation in seq happens at a green vertex (c-column
// nonnegative, nonzero) and the final C is a signed permutation matrix
// with every column nonpositive
bool verify_maximal_green(const ExchangeMatrix& B, const std::vector<int>& seq);

Seed apply_dt(const Seed& s);
Seed apply_dt_inverse(const Seed& s);

struct OrbitReport {
    std::vector<std::vector<Rational>> points;  // index 0 = unit point
    std::optional<int> period;
    int offset = 0;  // first index where the repeat was seen
    std::vector<int> numerator_bits;    // per iteration, max over coordinates
    std::vector<int> denominator_bits;
};

OrbitReport dt_orbit(const ExchangeMatrix& B, int max_iter, bool report_growth = true);

// seeds L_0..L_m_max, stepping by the squared inverse transformation
struct FillingSeeds {
    std::vector<Seed> seeds;
    std::vector<std::vector<bool>> equivalent;  // symmetric, diag true
    std::optional<std::pair<int, int>> first_repeat;
};

FillingSeeds filling_seeds(const Braid& w, int m_max);

// (B, C) match under one vertex relabeling: B conjugated, C columns
// permuted, C rows fixed (they index the initial frame)
bool seeds_equivalent(const Seed& a, const Seed& b);

int bit_length(const boost::multiprecision::cpp_int& v);

}  // namespace braidbrick
