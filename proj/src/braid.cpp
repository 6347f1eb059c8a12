#include "braidbrick/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace braidbrick {

Braid make_braid(int n, std::vector<int> letters) {
    if (n < 2) throw std::invalid_argument("braid needs at least 2 strands");
    for (int a : letters)
        if (a < 1 || a > n - 1)
            throw std::invalid_argument("letter " + std::to_string(a) +
                                        " out of range for n=" + std::to_string(n));
    return Braid{n, std::move(letters)};
}

Braid parse_braid(const std::string& text, std::optional<int> n_override) {
    std::vector<int> letters;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> long {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("expected digits at offset " + std::to_string(start));
        return std::stol(text.substr(start, i - start));
    };
    skip_ws();
    if (i < text.size() && text[i] == 'e') {
        size_t j = i + 1;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == text.size()) return make_braid(n_override.value_or(2), {});
    }
    bool token_form = i < text.size() && text[i] == 's';
    if (token_form) {
        while (i < text.size()) {
            skip_ws();
            if (i >= text.size()) break;
            if (text[i] != 's') throw std::invalid_argument("expected 's' at offset " + std::to_string(i));
            ++i;
            long gen = read_int();
            long exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                exp = read_int();
                if (exp < 1) throw std::invalid_argument("exponent must be positive");
            }
            if (gen < 1) throw std::invalid_argument("generator index must be positive");
            for (long e = 0; e < exp; ++e) letters.push_back(static_cast<int>(gen));
        }
    } else {
        // compact form: one digit per letter
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw std::invalid_argument(std::string("bad letter '") + c + "' in compact word");
            letters.push_back(c - '0');
        }
    }
    int max_gen = 0;
    for (int a : letters) max_gen = std::max(max_gen, a);
    int n = n_override.value_or(std::max(2, max_gen + 1));
    return make_braid(n, std::move(letters));
}

std::string braid_text(const Braid& w) {
    if (w.letters.empty()) return "e";
    std::string out;
    size_t i = 0;
    while (i < w.letters.size()) {
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(w.letters[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

Braid cyclic_rotate(const Braid& w, long k) {
    if (w.letters.empty()) return w;
    long m = static_cast<long>(w.letters.size());
    long r = ((k % m) + m) % m;
    std::vector<int> out(w.letters.begin() + r, w.letters.end());
    out.insert(out.end(), w.letters.begin(), w.letters.begin() + r);
    return Braid{w.n, std::move(out)};
}

Braid r3_move(const Braid& w, int pos) {
    if (pos < 0 || pos + 2 >= static_cast<int>(w.letters.size()))
        throw std::invalid_argument("r3 position out of range");
    int a = w.letters[pos], b = w.letters[pos + 1], c = w.letters[pos + 2];
    if (a != c || std::abs(a - b) != 1)
        throw std::invalid_argument("r3 needs pattern (i, i+-1, i) at position " + std::to_string(pos));
    Braid out = w;
    out.letters[pos] = b;
    out.letters[pos + 1] = a;
    out.letters[pos + 2] = b;
    return out;
}

Braid commute_move(const Braid& w, int pos) {
    if (pos < 0 || pos + 1 >= static_cast<int>(w.letters.size()))
        throw std::invalid_argument("commute position out of range");
    int a = w.letters[pos], b = w.letters[pos + 1];
    if (std::abs(a - b) < 2)
        throw std::invalid_argument("letters at position " + std::to_string(pos) + " do not commute");
    Braid out = w;
    std::swap(out.letters[pos], out.letters[pos + 1]);
    return out;
}

std::optional<Braid> markov_destabilize(const Braid& w) {
    if (w.n <= 2) return std::nullopt;
    auto count = [&](int g) { return std::count(w.letters.begin(), w.letters.end(), g); };
    if (count(w.n - 1) == 1) {
        std::vector<int> out;
        for (int a : w.letters)
            if (a != w.n - 1) out.push_back(a);
        return Braid{w.n - 1, std::move(out)};
    }
    if (count(1) == 1) {
        std::vector<int> out;
        for (int a : w.letters)
            if (a != 1) out.push_back(a - 1);
        return Braid{w.n - 1, std::move(out)};
    }
    return std::nullopt;
}

Braid delete_letters(const Braid& w, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end());
    if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
        throw std::invalid_argument("duplicate delete position");
    for (int p : positions)
        if (p < 0 || p >= static_cast<int>(w.letters.size()))
            throw std::invalid_argument("delete position out of range");
    std::vector<int> out;
    size_t next = 0;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (next < positions.size() && static_cast<size_t>(positions[next]) == i) {
            ++next;
            continue;
        }
        out.push_back(w.letters[i]);
    }
    return Braid{w.n, std::move(out)};
}

Braid opposite(const Braid& w) {
    std::vector<int> out(w.letters.rbegin(), w.letters.rend());
    return Braid{w.n, std::move(out)};
}

Braid connect_sum(const Braid& a, const Braid& b) {
    // glue b on top of a, overlapping one strand
    Braid out{a.n + b.n - 1, a.letters};
    for (int x : b.letters) out.letters.push_back(x + a.n - 1);
    return out;
}

Braid split_union(const Braid& a, const Braid& b) {
    Braid out{a.n + b.n, a.letters};
    for (int x : b.letters) out.letters.push_back(x + a.n);
    return out;
}

Braid subword_range(const Braid& w, int i, int j, bool reindex) {
    if (i < 1 || i > j || j > w.n - 1) throw std::invalid_argument("subword range invalid");
    std::vector<int> out;
    for (int a : w.letters)
        if (i <= a && a <= j) out.push_back(reindex ? a - (i - 1) : a);
    return Braid{reindex ? j - i + 2 : w.n, std::move(out)};
}

std::vector<int> permutation(const Braid& w) {
    // pos[p] = strand currently at position p, scanning the word upward
    std::vector<int> pos(w.n);
    std::iota(pos.begin(), pos.end(), 0);
    for (int a : w.letters) std::swap(pos[a - 1], pos[a]);
    std::vector<int> img(w.n);
    for (int p = 0; p < w.n; ++p) img[pos[p]] = p;
    return img;
}

int components(const Braid& w) {
    std::vector<int> img = permutation(w);
    std::vector<char> seen(w.n, 0);
    int cycles = 0;
    for (int s = 0; s < w.n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = img[t]) seen[t] = 1;
    }
    return cycles;
}

long tb(const Braid& w) {
    return static_cast<long>(w.letters.size()) - w.n;
}

long filling_b1(const Braid& w) {
    return static_cast<long>(w.letters.size()) - w.n + 1;
}

std::optional<long> filling_genus(const Braid& w) {
    if (components(w) != 1) return std::nullopt;
    return (tb(w) + 1) / 2;
}

}  // namespace braidbrick
