#include "braidbrick/brick.hpp"

#include <algorithm>
#include <map>

namespace braidbrick {

BrickDiagram build_bricks(const Braid& w) {
    BrickDiagram d{w.n, std::vector<std::vector<int>>(w.n - 1)};
    for (size_t p = 0; p < w.letters.size(); ++p)
        d.bars[w.letters[p] - 1].push_back(static_cast<int>(p) + 1);
    return d;
}

BrickQuiver extract_quiver(const Braid& w) {
    BrickDiagram d = build_bricks(w);
    BrickQuiver q;
    for (int lvl = 1; lvl <= w.n - 1; ++lvl) {
        auto& bars = d.bars[lvl - 1];
        for (size_t i = 0; i + 1 < bars.size(); ++i)
            q.bricks.push_back({lvl, bars[i], bars[i + 1]});
    }
    std::sort(q.bricks.begin(), q.bricks.end());
    std::map<Brick, int> idx;
    for (size_t i = 0; i < q.bricks.size(); ++i) idx[q.bricks[i]] = static_cast<int>(i);
    for (int lvl = 1; lvl <= w.n - 1; ++lvl) {
        auto& bars = d.bars[lvl - 1];
        for (size_t i = 0; i + 2 < bars.size(); ++i)
            q.arrows.emplace_back(idx[{lvl, bars[i], bars[i + 1]}], idx[{lvl, bars[i + 1], bars[i + 2]}]);
    }
    for (auto& u : q.bricks) {
        for (auto& v : q.bricks) {
            if (v.level != u.level + 1) continue;
            if (u.left < v.left && v.left < u.right && u.right < v.right)
                q.arrows.emplace_back(idx[v], idx[u]);
            else if (v.left < u.left && u.left < v.right && v.right < u.right)
                q.arrows.emplace_back(idx[u], idx[v]);
        }
    }
    return q;
}

ExchangeMatrix to_matrix(const BrickQuiver& q) {
    ExchangeMatrix m = zero_matrix(static_cast<int>(q.bricks.size()));
    for (auto [s, t] : q.arrows) {
        m.b[s][t] += 1;
        m.b[t][s] -= 1;
    }
    return m;
}

ExchangeMatrix brick_matrix(const Braid& w) {
    return to_matrix(extract_quiver(w));
}

bool acyclicity_criterion(const Braid& w) {
    // A directed cycle always closes between two adjacent levels and needs
    // five alternations there; the longest alternating subsequence of a
    // two-letter restriction is its number of maximal runs.
    for (int i = 1; i + 1 <= w.n - 1; ++i) {
        int runs = 0, prev = 0;
        for (int a : w.letters) {
            if (a != i && a != i + 1) continue;
            if (a != prev) {
                ++runs;
                prev = a;
            }
        }
        if (runs > 4) return false;
    }
    return true;
}

LevelCuts disconnection_split(const Braid& w) {
    LevelCuts cuts;
    auto count = [&](int g) { return std::count(w.letters.begin(), w.letters.end(), g); };
    for (int i = 1; i <= w.n - 1; ++i)
        if (count(i) < 2) cuts.empty_levels.push_back(i);
    for (int i = 1; i + 1 <= w.n - 1; ++i) {
        // Levels i, i+1 interleave iff the two-letter restriction holds an
        // alternating subsequence of length four, i.e. has >= 4 runs.
        int runs = 0, prev = 0;
        for (int a : w.letters) {
            if (a != i && a != i + 1) continue;
            if (a != prev) {
                ++runs;
                prev = a;
            }
        }
        if (runs < 4) cuts.pair_cuts.push_back(i);
    }
    return cuts;
}

std::string render_ascii(const Braid& w) {
    int len = static_cast<int>(w.letters.size());
    int width = std::max(1, 2 * len + 1);
    std::string strand(width, '-');
    std::vector<std::string> rows;
    for (int s = 1; s <= w.n; ++s) {
        rows.push_back(strand);
        if (s == w.n) break;
        std::string gap(width, ' ');
        for (int p = 0; p < len; ++p)
            if (w.letters[p] == s) gap[2 * p + 1] = '|';
        rows.push_back(gap);
    }
    BrickQuiver q = extract_quiver(w);
    for (auto& b : q.bricks) {
        // gap row for level b.level sits below strand row b.level
        std::string& gap = rows[2 * b.level - 1];
        gap[b.left + b.right - 1] = '*';
    }
    std::string out;
    for (auto& r : rows) {
        std::string trimmed = r;
        while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
        if (trimmed.empty()) continue;
        out += trimmed;
        out += '\n';
    }
    return out;
}

std::string quiver_dot(const BrickQuiver& q) {
    std::string out = "digraph bricks {\n";
    for (size_t i = 0; i < q.bricks.size(); ++i) {
        auto& b = q.bricks[i];
        out += "  v" + std::to_string(i) + " [label=\"" + std::to_string(b.level) + ":" +
               std::to_string(b.left) + "-" + std::to_string(b.right) + "\"];\n";
    }
    for (auto [s, t] : q.arrows)
        out += "  v" + std::to_string(s) + " -> v" + std::to_string(t) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace braidbrick
