#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidbrick/braid.hpp"
#include "braidbrick/quiver.hpp"

namespace braidbrick {

// bars[i-1] = 1-based word positions of letter i, increasing
struct BrickDiagram {
    int n = 2;
    std::vector<std::vector<int>> bars;
};

// A compact brick: two consecutive bars at one level. Bar positions are
// 1-based word positions.
struct Brick {
    int level = 0;
    int left = 0;
    int right = 0;
    auto operator<=>(const Brick&) const = default;
};

struct BrickQuiver {
    std::vector<Brick> bricks;  // sorted (level, left) lexicographic
    std::vector<std::pair<int, int>> arrows;
};

BrickDiagram build_bricks(const Braid& w);

// Same-level arrows go from a brick to its right neighbor sharing a bar.
// Cross-level arrows join strictly interleaving extents on adjacent
// levels, directed from the later-starting brick to the earlier one.
BrickQuiver extract_quiver(const Braid& w);

ExchangeMatrix to_matrix(const BrickQuiver& q);
ExchangeMatrix brick_matrix(const Braid& w);

// Word-level shortcut for is_acyclic(brick_matrix(w)), never building
// the quiver: acyclic iff no adjacent two-letter restriction has more
// than four maximal runs (a fifth alternation closes a directed cycle).
bool acyclicity_criterion(const Braid& w);

struct LevelCuts {
    std::vector<int> empty_levels;  // levels occurring fewer than two times
    std::vector<int> pair_cuts;     // i such that levels i, i+1 never interleave
};
LevelCuts disconnection_split(const Braid& w);

std::string render_ascii(const Braid& w);
std::string quiver_dot(const BrickQuiver& q);

}  // namespace braidbrick
