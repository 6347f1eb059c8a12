#pragma once

#include <optional>
#include <string>
#include <vector>

namespace braidbrick {

// Positive braid word on n strands. Letters are 1-based generator indices:
// letter i crosses strands i and i+1. Positions into the word are 0-based.
struct Braid {
    int n = 2;
    std::vector<int> letters;
    bool operator==(const Braid&) const = default;
};

// validates 1 <= letter <= n-1, n >= 2
Braid make_braid(int n, std::vector<int> letters);

// Accepts "s1^3 s2 s1" (caret optional, exponent >= 1) or a bare digit
// string like "112321" when every generator index is a single digit.
// n defaults to max letter + 1 unless overridden.
Braid parse_braid(const std::string& text, std::optional<int> n_override = std::nullopt);
std::string braid_text(const Braid& w);

// k > 0 moves the first k letters to the end
Braid cyclic_rotate(const Braid& w, long k);

// swaps (i, i+-1, i) -> (i+-1, i, i+-1) at pos..pos+2
Braid r3_move(const Braid& w, int pos);

// swaps adjacent letters at pos, pos+1 when |difference| >= 2
Braid commute_move(const Braid& w, int pos);

// Removes a generator occurring exactly once when it is the top one
// (n-1, preferred) or the bottom one (1, letters shift down by one) and
// drops the freed strand. Requires n > 2. Returns nullopt if neither
// applies.
std::optional<Braid> markov_destabilize(const Braid& w);

Braid delete_letters(const Braid& w, std::vector<int> positions);

// reverses the word; strand count unchanged
Braid opposite(const Braid& w);

// b on the same strands as a, sharing strand n of a with strand 1 of b
Braid connect_sum(const Braid& a, const Braid& b);
// b on fresh strands above a
Braid split_union(const Braid& a, const Braid& b);

// Letters with generator index in [i, j], order preserved. Requires
// 1 <= i <= j <= n-1. With reindex, indices shift down by i-1 and the
// result lives on j-i+2 strands.
Braid subword_range(const Braid& w, int i, int j, bool reindex);

// img[s] = end position of the strand entering at position s (0-based)
std::vector<int> permutation(const Braid& w);
// cycle count of the closure permutation
int components(const Braid& w);

long tb(const Braid& w);
long filling_b1(const Braid& w);
// defined only when the closure is a knot
std::optional<long> filling_genus(const Braid& w);

}  // namespace braidbrick
