#pragma once

#include <vector>

#include "braidbrick/braid.hpp"

namespace braidbrick {

// permutation as image table, 0-based
using Perm = std::vector<int>;

// Left-greedy factorization into permutation braids. Two positive words
// represent the same monoid element iff their factor lists coincide.
struct GreedyNormalForm {
    int n = 2;
    std::vector<Perm> factors;
    bool operator==(const GreedyNormalForm&) const = default;
};

GreedyNormalForm greedy_normal_form(const Braid& w);

// both words must live on the same strand count
bool monoid_equal(const Braid& a, const Braid& b);

}  // namespace braidbrick
