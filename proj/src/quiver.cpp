#include "braidbrick/quiver.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace braidbrick {

ExchangeMatrix zero_matrix(int size) {
    return ExchangeMatrix{size, std::vector<std::vector<int>>(size, std::vector<int>(size, 0))};
}

void check_skew(const ExchangeMatrix& m) {
    if (static_cast<int>(m.b.size()) != m.size)
        throw std::invalid_argument("matrix row count does not match size");
    for (int i = 0; i < m.size; ++i) {
        if (static_cast<int>(m.b[i].size()) != m.size)
            throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < m.size; ++j)
            if (m.b[i][j] != -m.b[j][i])
                throw std::invalid_argument("matrix is not skew-symmetric");
    }
}

ExchangeMatrix mutate(const ExchangeMatrix& m, int k) {
    int n = m.size;
    if (k < 0 || k >= n) throw std::invalid_argument("mutation vertex out of range");
    ExchangeMatrix out = zero_matrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out.b[i][j] = -m.b[i][j];
            } else {
                int x = m.b[i][j];
                if (m.b[i][k] > 0 && m.b[k][j] > 0)
                    x += m.b[i][k] * m.b[k][j];
                else if (m.b[i][k] < 0 && m.b[k][j] < 0)
                    x -= m.b[i][k] * m.b[k][j];
                out.b[i][j] = x;
            }
        }
    }
    return out;
}

ExchangeMatrix mutate_path(ExchangeMatrix m, const std::vector<int>& path) {
    for (int k : path) m = mutate(m, k);
    return m;
}

std::optional<std::vector<int>> topological_order(const ExchangeMatrix& m) {
    int n = m.size;
    std::vector<long> indeg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.b[i][j] > 0) indeg[j] += m.b[i][j];
    std::set<int> avail;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) avail.insert(i);
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    while (!avail.empty()) {
        int v = *avail.begin();
        avail.erase(avail.begin());
        order.push_back(v);
        seen[v] = 1;
        for (int j = 0; j < n; ++j) {
            if (m.b[v][j] > 0) {
                indeg[j] -= m.b[v][j];
                if (indeg[j] == 0 && !seen[j]) avail.insert(j);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool is_acyclic(const ExchangeMatrix& m) {
    return topological_order(m).has_value();
}

std::vector<std::vector<int>> connected_components(const ExchangeMatrix& m) {
    int n = m.size;
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int j = 0; j < n; ++j)
                if ((m.b[v][j] || m.b[j][v]) && !seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        parts.push_back(std::move(comp));
    }
    return parts;
}

ExchangeMatrix submatrix(const ExchangeMatrix& m, const std::vector<int>& verts) {
    ExchangeMatrix out = zero_matrix(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j)
            out.b[i][j] = m.b[verts[i]][verts[j]];
    return out;
}

namespace {

// Iterated neighborhood refinement. Returns a stable color per vertex.
std::vector<int> refine_colors(const ExchangeMatrix& m) {
    int n = m.size;
    std::vector<int> col(n, 0);
    {
        std::map<std::pair<std::vector<int>, std::vector<int>>, int> rank;
        std::vector<std::pair<std::vector<int>, std::vector<int>>> keys(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> row = m.b[i], c(n);
            for (int j = 0; j < n; ++j) c[j] = m.b[j][i];
            std::sort(row.begin(), row.end());
            std::sort(c.begin(), c.end());
            keys[i] = {std::move(row), std::move(c)};
            rank[keys[i]] = 0;
        }
        int r = 0;
        for (auto& kv : rank) kv.second = r++;
        for (int i = 0; i < n; ++i) col[i] = rank[keys[i]];
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<std::array<int, 3>>> keys(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                if (m.b[i][j] || m.b[j][i]) keys[i].push_back({col[j], m.b[i][j], m.b[j][i]});
            std::sort(keys[i].begin(), keys[i].end());
        }
        std::map<std::pair<int, std::vector<std::array<int, 3>>>, int> rank;
        for (int i = 0; i < n; ++i) rank[{col[i], keys[i]}] = 0;
        int r = 0;
        for (auto& kv : rank) kv.second = r++;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = rank[{col[i], keys[i]}];
        if (next == col) break;
        col = std::move(next);
    }
    return col;
}

}  // namespace

// Minimal encoding over orders that list color classes in color order and
// permute only within a class. The encoding grows one vertex at a time
// (its relations to everything already placed), and segment lengths depend
// only on the depth, so the lexicographic minimum can be taken greedily:
// keep every partial order achieving the minimal next segment and extend
// them all. Color-compatible orders cover all isomorphisms, hence equal
// strings exactly for isomorphic matrices.
std::string canonical_form(const ExchangeMatrix& m) {
    if (m.size == 0) return "0:";
    auto col = refine_colors(m);
    std::map<int, std::vector<int>> by_color;
    for (int i = 0; i < m.size; ++i) by_color[col[i]].push_back(i);

    std::vector<std::vector<int>> frontier{{}};
    std::vector<int> enc;
    for (auto& [c, group] : by_color) {
        for (size_t step = 0; step < group.size(); ++step) {
            std::vector<std::vector<int>> next;
            std::vector<int> best_seg;
            std::vector<int> seg;
            for (const auto& acc : frontier) {
                for (int v : group) {
                    if (std::find(acc.begin(), acc.end(), v) != acc.end()) continue;
                    seg.clear();
                    for (int u : acc) {
                        seg.push_back(m.b[v][u]);
                        seg.push_back(m.b[u][v]);
                    }
                    if (!next.empty() && seg > best_seg) continue;
                    if (next.empty() || seg < best_seg) {
                        best_seg = seg;
                        next.clear();
                    }
                    next.push_back(acc);
                    next.back().push_back(v);
                }
            }
            enc.insert(enc.end(), best_seg.begin(), best_seg.end());
            frontier = std::move(next);
        }
    }
    std::string out = std::to_string(m.size) + ":";
    for (int v : enc) {
        out += std::to_string(v);
        out += ',';
    }
    return out;
}

std::string type_name(const DynkinType& t) {
    switch (t.family) {
        case Family::A: return "A" + std::to_string(t.rank);
        case Family::D: return "D" + std::to_string(t.rank);
        case Family::E: return "E" + std::to_string(t.rank);
        case Family::AffineA: return "affine-A" + std::to_string(t.rank);
        case Family::AffineD: return "affine-D" + std::to_string(t.rank);
        case Family::AffineE: return "affine-E" + std::to_string(t.rank);
        case Family::None: return "none";
    }
    return "none";
}

std::vector<DynkinType> recognize(const ExchangeMatrix& m) {
    std::vector<DynkinType> out;
    for (auto& comp : connected_components(m)) {
        ExchangeMatrix s = submatrix(m, comp);
        int mm = s.size;
        auto none = DynkinType{Family::None, mm};
        bool simple = true;
        for (int i = 0; i < mm && simple; ++i)
            for (int j = 0; j < mm; ++j)
                if (std::abs(s.b[i][j]) > 1) {
                    simple = false;
                    break;
                }
        if (!simple || !is_acyclic(s)) {
            out.push_back(none);
            continue;
        }
        std::vector<int> deg(mm, 0);
        int edges = 0;
        for (int i = 0; i < mm; ++i)
            for (int j = 0; j < mm; ++j)
                if (s.b[i][j] || s.b[j][i]) ++deg[i];
        for (int d : deg) edges += d;
        edges /= 2;
        if (edges == mm) {
            bool all2 = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
            out.push_back(all2 ? DynkinType{Family::AffineA, mm - 1} : none);
            continue;
        }
        if (edges != mm - 1) {
            out.push_back(none);
            continue;
        }
        // tree shapes from here on
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; })) {
            out.push_back(DynkinType{Family::A, mm});
            continue;
        }
        std::vector<int> deg3, deg4;
        for (int i = 0; i < mm; ++i) {
            if (deg[i] == 3) deg3.push_back(i);
            if (deg[i] >= 4) deg4.push_back(i);
        }
        if (deg4.size() == 1 && deg3.empty() && deg[deg4[0]] == 4 && mm == 5) {
            out.push_back(DynkinType{Family::AffineD, 4});
            continue;
        }
        if (!deg4.empty()) {
            out.push_back(none);
            continue;
        }
        if (deg3.size() == 1) {
            int c = deg3[0];
            std::vector<int> legs;
            for (int s0 = 0; s0 < mm; ++s0) {
                if (!(s.b[c][s0] || s.b[s0][c])) continue;
                int len = 1, prev = c, cur = s0;
                for (;;) {
                    int nxt = -1;
                    for (int j = 0; j < mm; ++j)
                        if ((s.b[cur][j] || s.b[j][cur]) && j != prev) {
                            nxt = j;
                            break;
                        }
                    if (nxt < 0) break;
                    prev = cur;
                    cur = nxt;
                    ++len;
                }
                legs.push_back(len);
            }
            std::sort(legs.begin(), legs.end());
            DynkinType t = none;
            if (legs == std::vector<int>{1, 1, mm - 3} || (mm == 4 && legs == std::vector<int>{1, 1, 1}))
                t = {Family::D, mm};
            else if (legs == std::vector<int>{1, 2, 2})
                t = {Family::E, 6};
            else if (legs == std::vector<int>{1, 2, 3})
                t = {Family::E, 7};
            else if (legs == std::vector<int>{1, 2, 4})
                t = {Family::E, 8};
            else if (legs == std::vector<int>{2, 2, 2})
                t = {Family::AffineE, 6};
            else if (legs == std::vector<int>{1, 3, 3})
                t = {Family::AffineE, 7};
            else if (legs == std::vector<int>{1, 2, 5})
                t = {Family::AffineE, 8};
            out.push_back(t);
            continue;
        }
        if (deg3.size() == 2) {
            bool good = true;
            for (int c : deg3) {
                int leaves = 0;
                for (int j = 0; j < mm; ++j)
                    if ((s.b[c][j] || s.b[j][c]) && deg[j] == 1) ++leaves;
                if (leaves < 2) good = false;
            }
            out.push_back(good ? DynkinType{Family::AffineD, mm - 1} : none);
            continue;
        }
        out.push_back(none);
    }
    return out;
}

namespace {

bool has_large_entry(const ExchangeMatrix& m) {
    for (auto& row : m.b)
        for (int v : row)
            if (std::abs(v) >= 2) return true;
    return false;
}

bool is_dynkin_rep(const ExchangeMatrix& m) {
    auto types = recognize(m);
    if (types.size() != 1) return false;
    auto f = types[0].family;
    return f == Family::A || f == Family::D || f == Family::E;
}

}  // namespace

TypeVerdict is_finite_type(const ExchangeMatrix& m, std::size_t cap) {
    check_skew(m);
    TypeVerdict verdict;
    std::vector<int> full_path;
    std::size_t explored = 0;

    for (auto& comp : connected_components(m)) {
        ExchangeMatrix start = submatrix(m, comp);
        struct Node {
            ExchangeMatrix mat;
            std::vector<int> path;  // component-local vertex indices
        };
        std::unordered_set<std::string> seen{canonical_form(start)};
        std::deque<Node> frontier{{start, {}}};
        std::optional<std::vector<int>> rep_path;
        auto found_large = [&](const Node& nd) {
            verdict.kind = TypeVerdict::Kind::Infinite;
            verdict.path.clear();
            for (int k : nd.path) verdict.path.push_back(comp[k]);
            verdict.terminal = mutate_path(m, verdict.path);
            verdict.explored = explored + seen.size();
            verdict.types.clear();
        };
        while (!frontier.empty()) {
            Node nd = std::move(frontier.front());
            frontier.pop_front();
            if (has_large_entry(nd.mat)) {
                found_large(nd);
                return verdict;
            }
            if (!rep_path && is_dynkin_rep(nd.mat)) rep_path = nd.path;
            for (int k = 0; k < nd.mat.size; ++k) {
                ExchangeMatrix next = mutate(nd.mat, k);
                std::string c = canonical_form(next);
                if (seen.insert(c).second) {
                    auto path = nd.path;
                    path.push_back(k);
                    frontier.push_back({std::move(next), std::move(path)});
                    if (seen.size() > cap) {
                        verdict.kind = TypeVerdict::Kind::Indeterminate;
                        verdict.explored = explored + seen.size();
                        return verdict;
                    }
                }
            }
        }
        explored += seen.size();
        if (!rep_path) {
            // complete simply-laced enumeration without a Dynkin member
            // cannot happen for a connected class; defend anyway
            verdict.kind = TypeVerdict::Kind::Indeterminate;
            verdict.explored = explored;
            return verdict;
        }
        for (int k : *rep_path) full_path.push_back(comp[k]);
    }

    verdict.kind = TypeVerdict::Kind::Finite;
    verdict.path = full_path;
    verdict.terminal = mutate_path(m, full_path);
    verdict.types = recognize(verdict.terminal);
    verdict.explored = explored;
    return verdict;
}

MutationClass mutation_class(const ExchangeMatrix& m, std::size_t cap) {
    check_skew(m);
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    MutationClass out;
    out.forms.insert(canonical_form(m));
    std::deque<ExchangeMatrix> frontier{m};
    while (!frontier.empty()) {
        ExchangeMatrix cur = std::move(frontier.front());
        frontier.pop_front();
        for (int k = 0; k < cur.size; ++k) {
            ExchangeMatrix next = mutate(cur, k);
            std::string c = canonical_form(next);
            if (!out.forms.contains(c)) {
                out.forms.insert(c);
                if (out.forms.size() > cap) {
                    out.forms.erase(c);
                    out.complete = false;
                    return out;
                }
                frontier.push_back(std::move(next));
            }
        }
    }
    return out;
}

}  // namespace braidbrick
