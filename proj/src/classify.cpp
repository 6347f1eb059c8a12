#include "braidbrick/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

#include "braidbrick/brick.hpp"

namespace braidbrick {

namespace {

void guard(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

// cyclic block structure of the restriction to letters x and y:
// runs alternate x,y starting from an x-run that follows a y.
// nullopt when only one kind occurs (no alternation to speak of).
struct PairBlock {
    int a = 0;
    int b = 0;
    std::vector<int> apos;
    std::vector<int> bpos;
};

std::optional<std::vector<PairBlock>> cyclic_pairs(const Braid& w, int x, int y) {
    std::vector<int> pos;
    for (int p = 0; p < static_cast<int>(w.letters.size()); ++p) {
        if (w.letters[p] == x || w.letters[p] == y) pos.push_back(p);
    }
    if (pos.empty()) return std::vector<PairBlock>{};
    const int ln = static_cast<int>(pos.size());
    auto kind = [&](int i) { return w.letters[static_cast<size_t>(pos[static_cast<size_t>(i)])]; };
    int start = -1;
    for (int i = 0; i < ln; ++i) {
        if (kind(i) == x && kind((i - 1 + ln) % ln) == y) {
            start = i;
            break;
        }
    }
    if (start < 0) return std::nullopt;
    std::vector<std::pair<int, std::vector<int>>> runs;
    int cur_kind = kind(start);
    std::vector<int> cur;
    for (int k = 0; k < ln; ++k) {
        int j = (start + k) % ln;
        if (kind(j) == cur_kind) {
            cur.push_back(pos[static_cast<size_t>(j)]);
        } else {
            runs.emplace_back(cur_kind, cur);
            cur_kind = kind(j);
            cur = {pos[static_cast<size_t>(j)]};
        }
    }
    runs.emplace_back(cur_kind, cur);
    guard(runs.size() % 2 == 0, "cyclic_pairs: odd run count");
    std::vector<PairBlock> pairs;
    for (size_t k = 0; k + 1 < runs.size(); k += 2) {
        guard(runs[k].first == x && runs[k + 1].first == y, "cyclic_pairs: runs out of phase");
        PairBlock pb;
        pb.apos = runs[k].second;
        pb.bpos = runs[k + 1].second;
        pb.a = static_cast<int>(pb.apos.size());
        pb.b = static_cast<int>(pb.bpos.size());
        pairs.push_back(std::move(pb));
    }
    return pairs;
}

// ---------- decomposition into cut-irreducible pieces ----------

struct DecompAcc {
    std::vector<Braid> flat;
    std::vector<TraceStep> steps;
};

struct DecompPart {
    int unknots = 0;
    std::vector<std::vector<int>> groups;
    int count = 0;  // flat pieces this subtree became
};

// connect the top circle of the lower part with the bottom circle of the upper.
// a side with no factor groups is a stack of unknots and donates one of them.
DecompPart merge_cut(DecompPart a, DecompPart b) {
    DecompPart out;
    out.count = a.count + b.count;
    if (a.groups.empty() && b.groups.empty()) {
        guard(a.unknots >= 1 && b.unknots >= 1, "merge_cut: unknot side empty");
        out.unknots = a.unknots + b.unknots - 1;
        return out;
    }
    if (a.groups.empty()) {
        guard(a.unknots >= 1, "merge_cut: lower side empty");
        out.unknots = a.unknots - 1 + b.unknots;
        out.groups = std::move(b.groups);
        return out;
    }
    if (b.groups.empty()) {
        guard(b.unknots >= 1, "merge_cut: upper side empty");
        out.unknots = a.unknots + b.unknots - 1;
        out.groups = std::move(a.groups);
        return out;
    }
    out.unknots = a.unknots + b.unknots;
    out.groups = std::move(a.groups);
    auto& seam = out.groups.back();
    seam.insert(seam.end(), b.groups.front().begin(), b.groups.front().end());
    out.groups.insert(out.groups.end(), b.groups.begin() + 1, b.groups.end());
    return out;
}

// idx equals acc.flat.size() on entry: pieces are appended in replay order.
DecompPart decompose_rec(const Braid& w, int idx, DecompAcc& acc) {
    const int n = w.n;
    if (n == 1 || w.letters.empty()) {
        guard(n >= 2 || w.letters.empty(), "decompose: letters on one strand");
        acc.flat.push_back(w);
        return {n, {}, 1};
    }
    std::vector<int> cnt(static_cast<size_t>(n), 0);
    for (int a : w.letters) cnt[static_cast<size_t>(a)] += 1;
    // empty level: split union
    for (int i = 1; i < n; ++i) {
        if (cnt[static_cast<size_t>(i)] != 0) continue;
        Braid lo{i, {}};
        Braid hi{n - i, {}};
        for (int a : w.letters) {
            if (a < i) lo.letters.push_back(a);
            else hi.letters.push_back(a - i);
        }
        acc.steps.push_back({"split", idx, {i}});
        DecompPart p1 = decompose_rec(lo, idx, acc);
        DecompPart p2 = decompose_rec(hi, idx + p1.count, acc);
        DecompPart out;
        out.unknots = p1.unknots + p2.unknots;
        out.groups = std::move(p1.groups);
        out.groups.insert(out.groups.end(), p2.groups.begin(), p2.groups.end());
        out.count = p1.count + p2.count;
        return out;
    }
    // lone letter: delete it and splice the two sides (connect sum)
    for (int i = 1; i < n; ++i) {
        if (cnt[static_cast<size_t>(i)] != 1) continue;
        Braid lo{i, {}};
        Braid hi{n - i, {}};
        for (int a : w.letters) {
            if (a < i) lo.letters.push_back(a);
            else if (a > i) hi.letters.push_back(a - i);
        }
        acc.steps.push_back({"splice", idx, {i}});
        DecompPart p1 = decompose_rec(lo, idx, acc);
        DecompPart p2 = decompose_rec(hi, idx + p1.count, acc);
        return merge_cut(std::move(p1), std::move(p2));
    }
    // adjacent pair forming a single cyclic block: connect sum with one shared strand
    for (int i = 1; i + 1 < n; ++i) {
        auto pairs = cyclic_pairs(w, i, i + 1);
        if (!pairs || pairs->size() != 1) continue;
        Braid lo{i + 1, {}};
        Braid hi{n - i, {}};
        for (int a : w.letters) {
            if (a <= i) lo.letters.push_back(a);
            else hi.letters.push_back(a - i);
        }
        acc.steps.push_back({"cut", idx, {i}});
        DecompPart p1 = decompose_rec(lo, idx, acc);
        DecompPart p2 = decompose_rec(hi, idx + p1.count, acc);
        return merge_cut(std::move(p1), std::move(p2));
    }
    acc.flat.push_back(w);
    return {0, {{idx}}, 1};
}

// ---------- strand reduction ----------

// w starts with the lone x; exactly one y sits before the next x-run (length a2).
// commute interlopers out of the way, run the R3 chain, destabilize.
Reduction reduce_core(Braid w, int x, int y, int a2, std::vector<TraceStep> steps) {
    auto& L = w.letters;
    guard(!L.empty() && L[0] == x, "reduce_core: rotation lost the lone letter");
    int p = 0;
    while (L[static_cast<size_t>(p) + 1] != y) {
        guard(std::abs(L[static_cast<size_t>(p) + 1] - x) >= 2, "reduce_core: blocked walk");
        std::swap(L[static_cast<size_t>(p)], L[static_cast<size_t>(p) + 1]);
        steps.push_back({"c", 0, {p}});
        ++p;
    }
    const int q = p + 1;
    std::vector<int> xs;
    for (int j = q + 1; static_cast<int>(xs.size()) < a2; ++j) {
        guard(j < static_cast<int>(L.size()), "reduce_core: missing x-run");
        if (L[static_cast<size_t>(j)] == x) xs.push_back(j);
    }
    for (int k = 0; k < static_cast<int>(xs.size()); ++k) {
        int want = q + 1 + k;
        int j = xs[static_cast<size_t>(k)];
        while (j > want) {
            if (L[static_cast<size_t>(j) - 1] == x) break;
            guard(std::abs(L[static_cast<size_t>(j) - 1] - x) >= 2, "reduce_core: blocked bubble");
            std::swap(L[static_cast<size_t>(j) - 1], L[static_cast<size_t>(j)]);
            steps.push_back({"c", 0, {j - 1}});
            --j;
        }
    }
    for (int j = 0; j < a2 + 2; ++j) {
        guard(p + j < static_cast<int>(L.size()) &&
                  L[static_cast<size_t>(p + j)] == (j == 1 ? y : x),
              "reduce_core: segment not contiguous");
    }
    // x y x^a2 -> y^a2 x y, leaving a single x in the word
    for (int j = 0; j < a2; ++j) {
        w = r3_move(w, p + j);
        steps.push_back({"R3", 0, {p + j}});
    }
    guard(std::count(w.letters.begin(), w.letters.end(), x) == 1, "reduce_core: x not isolated");
    auto red = markov_destabilize(w);
    guard(red.has_value(), "reduce_core: destabilization failed");
    steps.push_back({"R1", 0, {}});
    return {*red, std::move(steps)};
}

// one strand reduction at the bottom (levels 1,2) or top (n-1,n-2) boundary,
// possibly after reversal; needs the two-level restriction to be two blocks
// with a (1,1) pairing.
std::optional<Reduction> reduce_end(const Braid& w, bool bottom) {
    const int n = w.n;
    if (n < 3) return std::nullopt;
    const int x = bottom ? 1 : n - 1;
    const int y = bottom ? 2 : n - 2;
    for (int flip = 0; flip < 2; ++flip) {
        Braid ww = flip ? opposite(w) : w;
        auto pairs = cyclic_pairs(ww, x, y);
        if (!pairs || pairs->size() != 2) return std::nullopt;
        const auto& P = *pairs;
        if (std::min(P[0].a, P[1].a) != 1 || std::min(P[0].b, P[1].b) != 1) return std::nullopt;
        for (int k = 0; k < 2; ++k) {
            if (P[static_cast<size_t>(k)].a != 1 || P[static_cast<size_t>(k)].b != 1) continue;
            std::vector<TraceStep> steps;
            if (flip) steps.push_back({"oppo", 0, {}});
            int rot = P[static_cast<size_t>(k)].apos[0];
            if (rot) {
                steps.push_back({"rho", 0, {rot}});
                ww = cyclic_rotate(ww, rot);
            }
            return reduce_core(std::move(ww), x, y, P[static_cast<size_t>(1 - k)].a, std::move(steps));
        }
    }
    return std::nullopt;
}

// bounded BFS over rotation classes via R3/commutation, stopping at a word
// where a boundary reduction applies
std::optional<Reduction> isotopy_search(const Braid& w, int max_nodes = 30000) {
    auto rot_key = [](const Braid& b) {
        const auto& L = b.letters;
        const int ln = static_cast<int>(L.size());
        std::vector<int> best = L;
        for (int i = 1; i < ln; ++i) {
            std::vector<int> cand;
            cand.reserve(static_cast<size_t>(ln));
            cand.insert(cand.end(), L.begin() + i, L.end());
            cand.insert(cand.end(), L.begin(), L.begin() + i);
            if (cand < best) best = std::move(cand);
        }
        best.insert(best.begin(), b.n);
        return best;
    };
    struct NodeRec {
        Braid word;
        int parent;
        int rot;
        TraceStep mv;
    };
    std::vector<NodeRec> nodes;
    nodes.push_back({w, -1, 0, {}});
    std::map<std::vector<int>, char> seen;
    seen[rot_key(w)] = 1;
    std::deque<int> queue{0};
    int popped = 0;
    auto unwind = [&](int tail, int rot, const TraceStep& mv) {
        std::vector<std::pair<int, TraceStep>> hops{{rot, mv}};
        for (int i = tail; i > 0; i = nodes[static_cast<size_t>(i)].parent) {
            hops.emplace_back(nodes[static_cast<size_t>(i)].rot, nodes[static_cast<size_t>(i)].mv);
        }
        std::reverse(hops.begin(), hops.end());
        std::vector<TraceStep> steps;
        for (auto& [r, m] : hops) {
            if (r) steps.push_back({"rho", 0, {r}});
            steps.push_back(m);
        }
        return steps;
    };
    while (!queue.empty() && popped < max_nodes) {
        const int ci = queue.front();
        queue.pop_front();
        ++popped;
        const Braid cur = nodes[static_cast<size_t>(ci)].word;
        const int ln = static_cast<int>(cur.letters.size());
        for (int r = 0; r < ln; ++r) {
            Braid wr = r ? cyclic_rotate(cur, r) : cur;
            const auto& Lr = wr.letters;
            for (int p = 0; p + 1 < ln; ++p) {
                std::optional<Braid> nb;
                TraceStep mv;
                if (p + 2 < ln && Lr[static_cast<size_t>(p)] == Lr[static_cast<size_t>(p) + 2] &&
                    std::abs(Lr[static_cast<size_t>(p)] - Lr[static_cast<size_t>(p) + 1]) == 1) {
                    nb = r3_move(wr, p);
                    mv = {"R3", 0, {p}};
                } else if (std::abs(Lr[static_cast<size_t>(p)] - Lr[static_cast<size_t>(p) + 1]) >= 2) {
                    nb = commute_move(wr, p);
                    mv = {"c", 0, {p}};
                }
                if (!nb) continue;
                auto key = rot_key(*nb);
                if (seen.count(key)) continue;
                if (reduce_end(*nb, true) || reduce_end(*nb, false)) {
                    return Reduction{*nb, unwind(ci, r, mv)};
                }
                seen[key] = 1;
                nodes.push_back({std::move(*nb), ci, r, mv});
                queue.push_back(static_cast<int>(nodes.size()) - 1);
            }
        }
    }
    return std::nullopt;
}

// ---------- 3-strand normalization ----------

// R3 on a contiguous s_2 s_1 s_2, rotating first if the pattern wraps.
// Drops the count of s_2 by one.
Braid merge_lone(Braid w, std::vector<TraceStep>& steps) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        const auto& L = w.letters;
        for (int p = 0; p + 2 < static_cast<int>(L.size()); ++p) {
            if (L[static_cast<size_t>(p)] == 2 && L[static_cast<size_t>(p) + 1] == 1 &&
                L[static_cast<size_t>(p) + 2] == 2) {
                steps.push_back({"R3", 0, {p}});
                return r3_move(w, p);
            }
        }
        steps.push_back({"rho", 0, {1}});
        w = cyclic_rotate(w, 1);
    }
    throw std::logic_error("merge_lone: no s2 s1 s2 pattern");
}

// rotate pairs[lead] to the front, then run the exponent-transfer chain.
// which==1 expects s_1^{a1} s_2 s_1^2 s_2^{b2}; which==2 expects s_1^{a1} s_2^{b1} s_1^2 s_2.
// both land on s_1^{a1} s_2 s_1^{b+1} s_2.
Braid chain_m2(Braid w, const std::vector<PairBlock>& pairs, int lead, int which,
               std::vector<TraceStep>& steps) {
    int start = pairs[static_cast<size_t>(lead)].apos[0];
    if (start) {
        steps.push_back({"rho", 0, {start}});
        w = cyclic_rotate(w, start);
    }
    auto pb = cyclic_pairs(w, 1, 2);
    guard(pb && pb->size() == 2, "chain_m2: block structure changed");
    const int a1 = (*pb)[0].a, b1 = (*pb)[0].b, b2 = (*pb)[1].b;
    guard((*pb)[1].a == 2, "chain_m2: second block is not 2");
    if (which == 1) {
        guard(b1 == 1, "chain_m2: chain 1 needs b1 == 1");
        w = r3_move(w, a1 - 1);
        steps.push_back({"R3", 0, {a1 - 1}});
        for (int r = 0; r < b2; ++r) {
            w = r3_move(w, a1 + 1 + r);
            steps.push_back({"R3", 0, {a1 + 1 + r}});
        }
        w = cyclic_rotate(w, -1);
        steps.push_back({"rho", 0, {-1}});
    } else {
        guard(b2 == 1, "chain_m2: chain 2 needs b2 == 1");
        w = cyclic_rotate(w, 1);
        steps.push_back({"rho", 0, {1}});
        w = r3_move(w, a1 + b1);
        steps.push_back({"R3", 0, {a1 + b1}});
        for (int p = a1 + b1 - 2; p >= a1 - 1; --p) {
            w = r3_move(w, p);
            steps.push_back({"R3", 0, {p}});
        }
    }
    return w;
}

// three blocks, all b == 1, two adjacent a's equal to 2: fold them into one block
Braid chain_m3(Braid w, std::vector<TraceStep>& steps) {
    auto pairs = cyclic_pairs(w, 1, 2);
    guard(pairs && pairs->size() == 3, "chain_m3: expected three blocks");
    const auto& P = *pairs;
    int lead = -1;
    for (int i = 0; i < 3; ++i) {
        if (P[static_cast<size_t>(i)].a == 2 && P[static_cast<size_t>((i + 1) % 3)].a == 2) {
            lead = i;
            break;
        }
    }
    guard(lead >= 0, "chain_m3: no adjacent 2,2");
    int start = P[static_cast<size_t>(lead)].apos[0];
    if (start) {
        steps.push_back({"rho", 0, {start}});
        w = cyclic_rotate(w, start);
    }
    auto pb = cyclic_pairs(w, 1, 2);
    guard(pb && pb->size() == 3 && (*pb)[0].a == 2 && (*pb)[1].a == 2, "chain_m3: rotation lost the 2,2");
    for (const auto& blk : *pb) guard(blk.b == 1, "chain_m3: b exponent not 1");
    w = r3_move(w, 1);
    steps.push_back({"R3", 0, {1}});
    w = r3_move(w, 3);
    steps.push_back({"R3", 0, {3}});
    w = cyclic_rotate(w, -1);
    steps.push_back({"rho", 0, {-1}});
    w = r3_move(w, 0);
    steps.push_back({"R3", 0, {0}});
    w = cyclic_rotate(w, 1);
    steps.push_back({"rho", 0, {1}});
    return w;
}

struct Norm3 {
    DynkinType type;
    Braid word;
    std::vector<TraceStep> steps;
};

// nullopt: word is type A (a reduction's job), infinite type, or otherwise
// outside the connected finite D/E table
std::optional<Norm3> normalize3_impl(Braid w) {
    guard(w.n == 3, "normalize3: not a 3-strand word");
    std::vector<TraceStep> steps;
    for (int iter = 0; iter < 200; ++iter) {
        auto pairs = cyclic_pairs(w, 1, 2);
        if (!pairs || pairs->size() < 2) return std::nullopt;
        const auto P = *pairs;
        const int m = static_cast<int>(P.size());
        bool any_lone_a = false;
        for (const auto& blk : P) any_lone_a = any_lone_a || blk.a == 1;
        if (m == 2) {
            const int a1 = P[0].a, b1 = P[0].b, a2 = P[1].a, b2 = P[1].b;
            if (any_lone_a) {
                if (std::min(b1, b2) == 1) return std::nullopt;  // type A
                w = merge_lone(std::move(w), steps);
                continue;
            }
            if (b1 == 1 && b2 == 1) {
                const int lo = std::min(a1, a2), hi = std::max(a1, a2);
                DynkinType t{Family::None, 0};
                if (lo == 2) t = {Family::D, hi + 2};
                else if (lo == 3 && hi >= 3 && hi <= 5) t = {Family::E, hi + 3};
                if (t.family == Family::None) return std::nullopt;
                return Norm3{t, std::move(w), std::move(steps)};
            }
            if (std::min(b1, b2) >= 2) return std::nullopt;
            if (a1 != 2 && a2 != 2) return std::nullopt;
            if (a2 == 2 && b1 == 1) w = chain_m2(std::move(w), P, 0, 1, steps);
            else if (a2 == 2 && b2 == 1) w = chain_m2(std::move(w), P, 0, 2, steps);
            else if (a1 == 2 && b2 == 1) w = chain_m2(std::move(w), P, 1, 1, steps);
            else if (a1 == 2 && b1 == 1) w = chain_m2(std::move(w), P, 1, 2, steps);
            else return std::nullopt;
            continue;
        }
        if (any_lone_a) {
            w = merge_lone(std::move(w), steps);
            continue;
        }
        if (m == 3) {
            bool all_b1 = true;
            int twos = 0;
            for (const auto& blk : P) {
                all_b1 = all_b1 && blk.b == 1;
                twos += blk.a == 2;
            }
            if (all_b1 && twos >= 2) {
                w = chain_m3(std::move(w), steps);
                continue;
            }
        }
        return std::nullopt;
    }
    throw std::logic_error("normalize3: no convergence");
}

// ---------- per-piece pipeline ----------

struct PieceOutcome {
    bool unknot = false;
    DynkinType type{Family::None, 0};
    Braid word{2, {}};
    std::vector<TraceStep> steps;
};

std::optional<PieceOutcome> run_piece(Braid w) {
    std::vector<TraceStep> steps;
    for (int iter = 0; iter < 64; ++iter) {
        if (w.n == 2) {
            if (w.letters.empty()) return std::nullopt;
            PieceOutcome out;
            if (w.letters.size() >= 2) {
                out.type = {Family::A, static_cast<int>(w.letters.size()) - 1};
            } else {
                out.unknot = true;
            }
            out.word = std::move(w);
            out.steps = std::move(steps);
            return out;
        }
        auto r = reduce_end(w, true);
        if (!r) r = reduce_end(w, false);
        if (!r && w.n > 3) {
            if (auto g = isotopy_search(w)) {
                steps.insert(steps.end(), g->steps.begin(), g->steps.end());
                w = std::move(g->word);
                r = reduce_end(w, true);
                if (!r) r = reduce_end(w, false);
            }
        }
        if (r) {
            steps.insert(steps.end(), r->steps.begin(), r->steps.end());
            if (r->word.n > 2) {
                // a reduction must not make the piece cut-reducible
                SplitResult sr = split_decompose(r->word);
                if (!(sr.trace.empty() && sr.unknots == 0 && sr.groups.size() == 1)) {
                    return std::nullopt;
                }
            }
            w = std::move(r->word);
            continue;
        }
        if (w.n == 3) {
            auto n3 = normalize3_impl(std::move(w));
            if (!n3) return std::nullopt;
            steps.insert(steps.end(), n3->steps.begin(), n3->steps.end());
            w = std::move(n3->word);
            // rotate the larger exponent block to the front: that is the standard word
            auto pb = cyclic_pairs(w, 1, 2);
            guard(pb && pb->size() == 2, "piece: normalized word lost its blocks");
            int k = ((*pb)[0].a >= (*pb)[1].a) ? 0 : 1;
            int start = (*pb)[static_cast<size_t>(k)].apos[0];
            if (start) {
                steps.push_back({"rho", 0, {start}});
                w = cyclic_rotate(w, start);
            }
            guard(w == standard_link_word(n3->type), "piece: endpoint is not the standard word");
            PieceOutcome out;
            out.type = n3->type;
            out.word = std::move(w);
            out.steps = std::move(steps);
            return out;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

// ---------- infinite-type witness patterns ----------

std::optional<std::vector<int>> subseq_positions(const std::vector<int>& L,
                                                 const std::vector<int>& pat) {
    std::vector<int> kept;
    size_t j = 0;
    for (int p = 0; p < static_cast<int>(L.size()) && j < pat.size(); ++p) {
        if (L[static_cast<size_t>(p)] == pat[j]) {
            kept.push_back(p);
            ++j;
        }
    }
    if (j == pat.size()) return kept;
    return std::nullopt;
}

// deletion witnesses: a rotation of w contains one of the known minimal
// infinite-type words as a subsequence. Candidates are re-verified against
// the mutation engine before being reported.
std::optional<std::pair<Braid, std::vector<TraceStep>>> find_infinite_witness(const Braid& w) {
    const int n = w.n;
    const int len = static_cast<int>(w.letters.size());
    if (len == 0) return std::nullopt;
    std::vector<std::vector<int>> pats;
    for (int i = 1; i + 1 < n; ++i) {
        pats.push_back({i, i, i + 1, i + 1, i, i, i + 1, i + 1});
        pats.push_back({i, i, i, i, i, i, i + 1, i, i, i, i + 1});
        pats.push_back({i + 1, i + 1, i + 1, i + 1, i + 1, i + 1, i, i + 1, i + 1, i + 1, i});
    }
    for (int i = 1; i + 2 < n; ++i) {
        pats.push_back({i, i + 2, i + 1, i + 1, i, i + 2, i + 1, i + 1});
        pats.push_back({i + 2, i, i + 1, i + 1, i + 2, i, i + 1, i + 1});
    }
    std::vector<int> cnt(static_cast<size_t>(n), 0);
    for (int a : w.letters) ++cnt[static_cast<size_t>(a)];
    for (const auto& pat : pats) {
        std::vector<int> need(static_cast<size_t>(n), 0);
        for (int a : pat) ++need[static_cast<size_t>(a)];
        bool enough = true;
        for (int i = 1; i < n && enough; ++i) {
            enough = need[static_cast<size_t>(i)] <= cnt[static_cast<size_t>(i)];
        }
        if (!enough) continue;
        Braid cand{n, pat};
        ExchangeMatrix bm = brick_matrix(cand);
        if (!is_acyclic(bm)) continue;
        if (is_finite_type(bm, 20000).kind != TypeVerdict::Kind::Infinite) continue;
        for (int rot = 0; rot < len; ++rot) {
            Braid wr = rot ? cyclic_rotate(w, rot) : w;
            auto kept = subseq_positions(wr.letters, pat);
            if (!kept) continue;
            std::vector<TraceStep> steps;
            if (rot) steps.push_back({"rho", 0, {rot}});
            std::vector<long> removed;
            size_t ki = 0;
            for (int p = 0; p < len; ++p) {
                if (ki < kept->size() && (*kept)[ki] == p) {
                    ++ki;
                } else {
                    removed.push_back(p);
                }
            }
            if (!removed.empty()) steps.push_back({"delete", 0, std::move(removed)});
            return {{std::move(cand), std::move(steps)}};
        }
    }
    return std::nullopt;
}

}  // namespace

// ---------- public surface ----------

std::vector<std::vector<Braid>> SplitResult::factor_words() const {
    std::vector<std::vector<Braid>> out;
    for (const auto& g : groups) {
        std::vector<Braid> ws;
        for (int idx : g) ws.push_back(pieces[static_cast<size_t>(idx)]);
        out.push_back(std::move(ws));
    }
    return out;
}

SplitResult split_decompose(const Braid& w) {
    DecompAcc acc;
    DecompPart part = decompose_rec(w, 0, acc);
    SplitResult out;
    out.unknots = part.unknots;
    out.pieces = std::move(acc.flat);
    out.groups = std::move(part.groups);
    out.trace = std::move(acc.steps);
    return out;
}

std::optional<Reduction> reduce_strands(const Braid& w) {
    auto r = reduce_end(w, true);
    if (!r) r = reduce_end(w, false);
    if (!r) {
        // degenerate blocks: a lone boundary letter destabilizes directly
        if (auto red = markov_destabilize(w)) return Reduction{*red, {{"R1", 0, {}}}};
    }
    return r;
}

Braid normalize_3strand(const Braid& w) {
    if (w.n != 3) throw std::invalid_argument("normalize_3strand: need a 3-strand word");
    auto n3 = normalize3_impl(w);
    if (!n3) {
        throw std::invalid_argument("normalize_3strand: not a connected finite D/E word");
    }
    return n3->word;
}

Braid reconstruct_word(const LinkDecomposition& d) {
    std::vector<Braid> parts;
    for (const auto& f : d.factors) {
        if (f.empty()) throw std::invalid_argument("reconstruct_word: empty factor");
        Braid acc = f[0].word;
        for (size_t i = 1; i < f.size(); ++i) acc = connect_sum(acc, f[i].word);
        parts.push_back(std::move(acc));
    }
    for (int u = 0; u < d.unknots; ++u) parts.push_back(make_braid(2, {1}));
    if (parts.empty()) throw std::invalid_argument("reconstruct_word: empty decomposition");
    Braid out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out = split_union(out, parts[i]);
    return out;
}

int decomposition_components(const LinkDecomposition& d) {
    int total = d.unknots;
    for (const auto& f : d.factors) {
        int c = 0;
        for (const auto& s : f) c += expected_components(s.type);
        total += c - (static_cast<int>(f.size()) - 1);
    }
    return total;
}

std::vector<Braid> apply_trace(const Braid& w, const std::vector<TraceStep>& steps) {
    std::vector<Braid> pieces{w};
    for (const auto& s : steps) {
        if (s.piece < 0 || s.piece >= static_cast<int>(pieces.size())) {
            throw std::invalid_argument("trace: piece index out of range");
        }
        auto arg0 = [&]() -> long {
            if (s.args.empty()) throw std::invalid_argument("trace: missing argument for " + s.move);
            return s.args[0];
        };
        Braid cur = pieces[static_cast<size_t>(s.piece)];
        if (s.move == "rho") {
            pieces[static_cast<size_t>(s.piece)] = cyclic_rotate(cur, arg0());
        } else if (s.move == "R3") {
            pieces[static_cast<size_t>(s.piece)] = r3_move(cur, static_cast<int>(arg0()));
        } else if (s.move == "c") {
            pieces[static_cast<size_t>(s.piece)] = commute_move(cur, static_cast<int>(arg0()));
        } else if (s.move == "oppo") {
            pieces[static_cast<size_t>(s.piece)] = opposite(cur);
        } else if (s.move == "R1") {
            auto red = markov_destabilize(cur);
            if (!red) throw std::invalid_argument("trace: destabilization does not apply");
            pieces[static_cast<size_t>(s.piece)] = *red;
        } else if (s.move == "delete") {
            std::vector<int> ps(s.args.begin(), s.args.end());
            pieces[static_cast<size_t>(s.piece)] = delete_letters(cur, ps);
        } else if (s.move == "split" || s.move == "splice" || s.move == "cut") {
            const int i = static_cast<int>(arg0());
            if (i < 1 || i >= cur.n) throw std::invalid_argument("trace: level out of range");
            const long have = std::count(cur.letters.begin(), cur.letters.end(), i);
            Braid lower{0, {}};
            Braid upper{0, {}};
            if (s.move == "cut") {
                lower.n = i + 1;
                upper.n = cur.n - i;
                for (int a : cur.letters) {
                    if (a <= i) lower.letters.push_back(a);
                    else upper.letters.push_back(a - i);
                }
            } else {
                if (s.move == "split" && have != 0) {
                    throw std::invalid_argument("trace: split level not empty");
                }
                if (s.move == "splice" && have != 1) {
                    throw std::invalid_argument("trace: splice level not a lone letter");
                }
                lower.n = i;
                upper.n = cur.n - i;
                for (int a : cur.letters) {
                    if (a < i) lower.letters.push_back(a);
                    else if (a > i) upper.letters.push_back(a - i);
                }
            }
            pieces[static_cast<size_t>(s.piece)] = std::move(lower);
            pieces.insert(pieces.begin() + s.piece + 1, std::move(upper));
        } else {
            throw std::invalid_argument("trace: unknown move " + s.move);
        }
    }
    return pieces;
}

ClassifyVerdict classify(const Braid& w, int cap) {
    ClassifyVerdict v;
    ExchangeMatrix bm = brick_matrix(w);
    v.engine = is_finite_type(bm, cap);
    if (v.engine.kind == TypeVerdict::Kind::Indeterminate) {
        v.kind = ClassifyVerdict::Kind::Indeterminate;
        v.note = "mutation search hit its node cap";
        return v;
    }
    if (v.engine.kind == TypeVerdict::Kind::Infinite) {
        v.kind = ClassifyVerdict::Kind::Infinite;
        if (auto wit = find_infinite_witness(w)) {
            v.witness = std::move(wit->first);
            v.trace = std::move(wit->second);
        } else {
            v.note = "no dominated witness pattern found; mutation certificate only";
        }
        return v;
    }
    SplitResult sr = split_decompose(w);
    v.trace = sr.trace;
    LinkDecomposition d;
    d.unknots = sr.unknots;
    std::vector<DynkinType> found;
    for (const auto& g : sr.groups) {
        std::vector<StandardLink> summands;
        for (int idx : g) {
            auto out = run_piece(sr.pieces[static_cast<size_t>(idx)]);
            if (!out) {
                v.kind = ClassifyVerdict::Kind::Indeterminate;
                v.note = "rewrite pipeline failed on a connect-sum piece";
                v.trace.clear();
                return v;
            }
            for (auto& st : out->steps) st.piece = idx;
            v.trace.insert(v.trace.end(), out->steps.begin(), out->steps.end());
            if (out->unknot) continue;
            found.push_back(out->type);
            summands.push_back({out->type, standard_link_word(out->type)});
        }
        if (summands.empty()) d.unknots += 1;
        else d.factors.push_back(std::move(summands));
    }
    std::vector<DynkinType> certified = v.engine.types;
    std::sort(found.begin(), found.end());
    std::sort(certified.begin(), certified.end());
    if (found != certified) {
        v.kind = ClassifyVerdict::Kind::Indeterminate;
        v.note = "decomposition types disagree with the mutation certificate";
        v.trace.clear();
        return v;
    }
    v.kind = ClassifyVerdict::Kind::Finite;
    v.decomposition = std::move(d);
    const int expect = decomposition_components(v.decomposition);
    const int actual = components(w);
    if (expect != actual) {
        v.note = "component count mismatch: decomposition gives " + std::to_string(expect) +
                 ", closure has " + std::to_string(actual);
    }
    return v;
}

const char* verdict_name(ClassifyVerdict::Kind k) {
    switch (k) {
        case ClassifyVerdict::Kind::Finite: return "finite";
        case ClassifyVerdict::Kind::Infinite: return "infinite";
        default: return "indeterminate";
    }
}

}  // namespace braidbrick
