#include "braidbrick/cluster.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "braidbrick/brick.hpp"

namespace braidbrick {

int bit_length(const boost::multiprecision::cpp_int& v) {
    if (v == 0) return 0;
    return static_cast<int>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
}

Seed unit_seed(const ExchangeMatrix& B) {
    check_skew(B);
    Seed s;
    s.B = B;
    s.x.assign(B.size, Rational(1));
    s.C.assign(B.size, std::vector<int>(B.size, 0));
    for (int i = 0; i < B.size; ++i) s.C[i][i] = 1;
    return s;
}

namespace {

void check_sign_coherence(const std::vector<std::vector<int>>& C) {
    int n = static_cast<int>(C.size());
    for (int j = 0; j < n; ++j) {
        bool pos = false, neg = false;
        for (int i = 0; i < n; ++i) {
            if (C[i][j] > 0) pos = true;
            if (C[i][j] < 0) neg = true;
        }
        if (pos && neg) throw std::logic_error("c-vector lost sign coherence");
    }
}

bool column_green(const std::vector<std::vector<int>>& C, int k) {
    bool nonzero = false;
    for (auto& row : C) {
        if (row[k] < 0) return false;
        if (row[k] != 0) nonzero = true;
    }
    return nonzero;
}

}  // namespace

Seed seed_mutate(const Seed& s, int k) {
    int n = s.B.size;
    if (k < 0 || k >= n) throw std::invalid_argument("seed mutation vertex out of range");
    Rational p1(1), p2(1);
    for (int i = 0; i < n; ++i) {
        int e = s.B.b[i][k];
        for (int t = 0; t < e; ++t) p1 *= s.x[i];
        for (int t = 0; t < -e; ++t) p2 *= s.x[i];
    }
    Seed out;
    out.x = s.x;
    out.x[k] = (p1 + p2) / s.x[k];
    out.C.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == k) {
                out.C[i][j] = -s.C[i][j];
            } else {
                int v = s.C[i][j];
                if (s.C[i][k] > 0 && s.B.b[k][j] > 0)
                    v += s.C[i][k] * s.B.b[k][j];
                else if (s.C[i][k] < 0 && s.B.b[k][j] < 0)
                    v -= s.C[i][k] * s.B.b[k][j];
                out.C[i][j] = v;
            }
        }
    }
    out.B = mutate(s.B, k);
    check_sign_coherence(out.C);
    return out;
}

std::vector<int> dt_sequence(const ExchangeMatrix& B) {
    auto order = topological_order(B);
    if (!order) throw std::invalid_argument("dt_sequence needs an acyclic matrix");
    std::reverse(order->begin(), order->end());
    return *order;
}

bool verify_maximal_green(const ExchangeMatrix& B, const std::vector<int>& seq) {
    Seed s = unit_seed(B);
    for (int k : seq) {
        if (!column_green(s.C, k)) return false;
        s = seed_mutate(s, k);
    }
    int n = B.size;
    std::vector<int> rows;
    for (int j = 0; j < n; ++j) {
        int nonzero = -1, count = 0;
        for (int i = 0; i < n; ++i) {
            if (s.C[i][j] != 0) {
                ++count;
                nonzero = i;
            }
        }
        if (count != 1 || s.C[nonzero][j] != -1) return false;
        rows.push_back(nonzero);
    }
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

Seed apply_dt(const Seed& s) {
    Seed out = s;
    for (int k : dt_sequence(s.B)) out = seed_mutate(out, k);
    return out;
}

Seed apply_dt_inverse(const Seed& s) {
    auto seq = dt_sequence(s.B);
    Seed out = s;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) out = seed_mutate(out, *it);
    return out;
}

OrbitReport dt_orbit(const ExchangeMatrix& B, int max_iter, bool report_growth) {
    if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
    auto seq = dt_sequence(B);
    Seed s = unit_seed(B);
    OrbitReport report;
    report.points.push_back(s.x);
    std::map<std::vector<Rational>, int> seen{{s.x, 0}};
    for (int it = 1; it <= max_iter; ++it) {
        for (int k : seq) s = seed_mutate(s, k);
        if (!(s.B == B)) throw std::logic_error("full sweep must restore the matrix");
        if (report_growth) {
            int nb = 0, db = 0;
            for (auto& v : s.x) {
                nb = std::max(nb, bit_length(boost::multiprecision::numerator(v)));
                db = std::max(db, bit_length(boost::multiprecision::denominator(v)));
            }
            report.numerator_bits.push_back(nb);
            report.denominator_bits.push_back(db);
        }
        auto found = seen.find(s.x);
        if (found != seen.end()) {
            report.period = it - found->second;
            report.offset = found->second;
            return report;
        }
        seen.emplace(s.x, it);
        report.points.push_back(s.x);
    }
    return report;
}

bool seeds_equivalent(const Seed& a, const Seed& b) {
    int n = a.B.size;
    if (b.B.size != n) return false;
    // candidate images per column: C columns must match exactly
    std::vector<std::vector<int>> cand(n);
    for (int j = 0; j < n; ++j) {
        for (int v = 0; v < n; ++v) {
            bool ok = true;
            for (int r = 0; r < n; ++r)
                if (a.C[r][j] != b.C[r][v]) {
                    ok = false;
                    break;
                }
            if (ok) cand[j].push_back(v);
        }
        if (cand[j].empty()) return false;
    }
    std::vector<int> sigma(n, -1);
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int j) -> bool {
        if (j == n) return true;
        for (int v : cand[j]) {
            if (used[v]) continue;
            bool ok = true;
            for (int t = 0; t < j; ++t)
                if (a.B.b[t][j] != b.B.b[sigma[t]][v] || a.B.b[j][t] != b.B.b[v][sigma[t]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            sigma[j] = v;
            used[v] = 1;
            if (self(self, j + 1)) return true;
            used[v] = 0;
            sigma[j] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

FillingSeeds filling_seeds(const Braid& w, int m_max) {
    if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
    ExchangeMatrix B = brick_matrix(w);
    if (!is_acyclic(B)) throw std::invalid_argument("filling seeds need an acyclic brick quiver");
    FillingSeeds out;
    Seed s = unit_seed(B);
    out.seeds.push_back(s);
    for (int m = 1; m <= m_max; ++m) {
        s = apply_dt_inverse(apply_dt_inverse(s));
        out.seeds.push_back(s);
    }
    int count = m_max + 1;
    out.equivalent.assign(count, std::vector<bool>(count, false));
    for (int i = 0; i < count; ++i) out.equivalent[i][i] = true;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            bool eq = seeds_equivalent(out.seeds[i], out.seeds[j]);
            out.equivalent[i][j] = out.equivalent[j][i] = eq;
            if (eq && !out.first_repeat) out.first_repeat = {i, j};
        }
    }
    return out;
}

}  // namespace braidbrick
