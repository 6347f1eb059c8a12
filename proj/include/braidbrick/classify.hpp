#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidbrick/braid.hpp"
#include "braidbrick/links.hpp"
#include "braidbrick/quiver.hpp"

namespace braidbrick {

// One rewrite or surgery step, replayable by apply_trace.
// piece indexes the working piece list (0 until a split/splice/cut grows it).
//   rho    args={k}          cyclic rotation by k
//   R3     args={p}          braid relation at position p
//   c      args={p}          commutation at position p
//   oppo   args={}           word reversal
//   R1     args={}           Markov destabilization
//   delete args=positions    dominance deletion (0-based positions, ascending)
//   split  args={i}          empty level i: piece -> lower (i strands), upper (n-i)
//   splice args={i}          lone s_i: remove it, then split as above
//   cut    args={i}          one-block adjacent pair: lower (i+1 strands), upper (n-i)
struct TraceStep {
    std::string move;
    int piece = 0;
    std::vector<long> args;
    bool operator==(const TraceStep&) const = default;
};

// Replays steps starting from the single piece w. Throws std::invalid_argument
// when a step does not apply to the current state.
std::vector<Braid> apply_trace(const Braid& w, const std::vector<TraceStep>& steps);

struct SplitResult {
    int unknots = 0;
    std::vector<Braid> pieces;              // final piece list, replay order
    std::vector<std::vector<int>> groups;   // connect-sum groups of piece indices
    std::vector<TraceStep> trace;
    std::vector<std::vector<Braid>> factor_words() const;
};

// Cuts w into cut-irreducible pieces: empty levels give split unions, lone
// letters and one-block adjacent pairs give connect sums. Free strands are
// counted as unknots.
SplitResult split_decompose(const Braid& w);

struct Reduction {
    Braid word;
    std::vector<TraceStep> steps;
};

// One strand-count reduction at the bottom or top boundary pair, when its
// two-level restriction is s_x^{a_1} s_y^{b_1} s_x^{a_2} s_y^{b_2} with a
// (1,1) pairing available (possibly after reversal). Absent otherwise.
std::optional<Reduction> reduce_strands(const Braid& w);

// Rewrites a 3-strand word with connected finite D/E quiver to
// s_1^a s_2 s_1^b s_2 form (a standard D/E word up to rotation).
// Throws std::invalid_argument outside that domain.
Braid normalize_3strand(const Braid& w);

struct LinkDecomposition {
    int unknots = 0;
    std::vector<std::vector<StandardLink>> factors;  // split factors, connect-sum order
};

// Joins the factors by connect sum, the results by split union, and realizes
// each unknot as the closure of s_1 on two strands.
Braid reconstruct_word(const LinkDecomposition& d);

// unknots plus per-factor closure components (a k-fold connect sum glues k-1 pairs)
int decomposition_components(const LinkDecomposition& d);

struct ClassifyVerdict {
    enum class Kind { Finite, Infinite, Indeterminate };
    Kind kind = Kind::Indeterminate;
    LinkDecomposition decomposition;    // Finite only
    std::optional<Braid> witness;       // Infinite, when the pattern search lands
    std::vector<TraceStep> trace;       // Finite: full pipeline; Infinite: rho+delete to witness
    TypeVerdict engine;                 // mutation-search certificate, always present
    std::string note;
};

// Decides the closure of w: a split union of unknots and connect sums of
// standard ADE links (with a replayable move trace), or infinite type (with a
// dominated witness word when one of the known infinite patterns embeds), or
// Indeterminate when the mutation search hits its cap.
ClassifyVerdict classify(const Braid& w, int cap = 100000);

const char* verdict_name(ClassifyVerdict::Kind k);

}  // namespace braidbrick
