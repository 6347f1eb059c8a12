#include "braidbrick/normal_form.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braidbrick {

namespace {

// left descents: a in 1..n-1 with p[a-1] > p[a]
std::vector<char> starting_set(const Perm& p) {
    int n = static_cast<int>(p.size());
    std::vector<char> s(n, 0);
    for (int a = 1; a < n; ++a) s[a] = p[a - 1] > p[a];
    return s;
}

std::vector<char> finishing_set(const Perm& p) {
    int n = static_cast<int>(p.size());
    Perm inv(n);
    for (int i = 0; i < n; ++i) inv[p[i]] = i;
    return starting_set(inv);
}

bool is_identity(const Perm& p) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
    return true;
}

}  // namespace

GreedyNormalForm greedy_normal_form(const Braid& w) {
    int n = w.n;
    std::vector<Perm> factors;
    factors.reserve(w.letters.size());
    for (int a : w.letters) {
        Perm t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[a - 1], t[a]);
        factors.push_back(std::move(t));
    }
    // Bubble letters leftward: whenever some s_a starts the right factor but
    // does not finish the left one, move it across. Repeat to a fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        size_t i = 0;
        while (i + 1 < factors.size()) {
            Perm a_fac = factors[i];
            Perm b_fac = factors[i + 1];
            auto sb = starting_set(b_fac);
            auto fa = finishing_set(a_fac);
            bool moved = false;
            for (;;) {
                int a = -1;
                for (int g = 1; g < n; ++g)
                    if (sb[g] && !fa[g]) {
                        a = g;
                        break;
                    }
                if (a < 0) break;
                // post-compose the left factor with the transposition (a-1 a):
                // swap those two values wherever they occur
                for (int& v : a_fac) {
                    if (v == a - 1)
                        v = a;
                    else if (v == a)
                        v = a - 1;
                }
                // pre-compose the right factor: swap entries a-1 and a
                std::swap(b_fac[a - 1], b_fac[a]);
                sb = starting_set(b_fac);
                fa = finishing_set(a_fac);
                moved = true;
            }
            if (moved) {
                factors[i] = a_fac;
                factors[i + 1] = b_fac;
                changed = true;
            }
            if (is_identity(factors[i + 1])) {
                factors.erase(factors.begin() + static_cast<long>(i) + 1);
                changed = true;
            } else {
                ++i;
            }
        }
    }
    std::erase_if(factors, is_identity);
    return GreedyNormalForm{n, std::move(factors)};
}

bool monoid_equal(const Braid& a, const Braid& b) {
    if (a.n != b.n) throw std::invalid_argument("monoid_equal needs equal strand counts");
    return greedy_normal_form(a) == greedy_normal_form(b);
}

}  // namespace braidbrick
