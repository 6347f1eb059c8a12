#pragma once

#include <string>
#include <vector>

#include "braidbrick/braid.hpp"
#include "braidbrick/quiver.hpp"

namespace braidbrick {

enum class Relation { Isotopy, Dominance };

// one rewrite step: the move, its parameters, and the exact expected result
struct DerivationStep {
    std::string move;          // R1, R3, rho, c, delete, oppo, eq
    std::vector<long> params;  // R3/c: position; rho: offset; delete: positions; else empty
    Braid result;
    bool operator==(const DerivationStep&) const = default;
};

struct Derivation {
    std::string name;
    Braid start{2, {}};
    Relation claimed = Relation::Isotopy;
    std::vector<DerivationStep> steps;
};

struct CheckResult {
    bool ok = true;
    int step = -1;  // failing step index, -1 for header-level failures
    std::string reason;
};

// Dominance iff any letters were deleted; everything else is isotopy-level
Relation compose_relation(const std::vector<DerivationStep>& steps);

// replays every step through the word moves (eq via the normal form) and
// compares the composite relation with the claim
CheckResult check(const Derivation& d);

// Text format, line oriented ('#' comments and blank lines skipped):
//   n=<int> claim=<isotopy|dominance>
//   word: <braid text>
//   step <move> <params...> -> <braid text>
// Braid text is either generator tokens like "s1^3 s2" or a compact digit
// string when every index is below 10; "e" denotes the empty word.
// A JSON object {"n","claim","word","steps":[{"move","params","result"}]}
// is accepted as well.
Derivation parse_derivation(const std::string& text, const std::string& name = "");
Derivation load_derivation(const std::string& path);

struct EndpointReport {
    std::vector<DynkinType> start_types;
    std::vector<DynkinType> end_types;
    bool start_acyclic = false;
    bool end_acyclic = false;
    TypeVerdict start_verdict;
    TypeVerdict end_verdict;
};

// brick-quiver recognition and finite/infinite verdicts for the chain's first
// and last word; throws std::invalid_argument when the chain does not check
EndpointReport endpoint_quiver_report(const Derivation& d, int cap = 100000);

struct CorpusEntry {
    std::string file;
    bool expected_fail = false;  // files named *-bad.* must fail the check
    CheckResult result;
    bool passed = false;
};

// runs every *.txt/*.json fixture under dir (sorted by name); jobs > 1 splits
// the files across threads, output order stays deterministic
std::vector<CorpusEntry> run_corpus(const std::string& dir, int jobs = 1);

}  // namespace braidbrick
