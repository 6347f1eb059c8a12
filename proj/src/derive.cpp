#include "braidbrick/derive.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "braidbrick/brick.hpp"
#include "braidbrick/normal_form.hpp"

namespace braidbrick {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

Relation parse_claim(const std::string& s) {
    if (s == "isotopy") return Relation::Isotopy;
    if (s == "dominance") return Relation::Dominance;
    throw std::invalid_argument("derivation: unknown claim '" + s + "'");
}

Derivation parse_json_derivation(const std::string& text, const std::string& name) {
    nlohmann::json j = nlohmann::json::parse(text);
    Derivation d;
    d.name = name;
    int n = j.at("n").get<int>();
    d.claimed = parse_claim(j.at("claim").get<std::string>());
    d.start = parse_braid(j.at("word").get<std::string>(), n);
    int cur_n = n;
    for (const auto& js : j.at("steps")) {
        DerivationStep st;
        st.move = js.at("move").get<std::string>();
        if (js.contains("params")) {
            for (const auto& p : js.at("params")) st.params.push_back(p.get<long>());
        }
        if (st.move == "R1") cur_n -= 1;
        st.result = parse_braid(js.at("result").get<std::string>(), cur_n);
        d.steps.push_back(std::move(st));
    }
    return d;
}

}  // namespace

Relation compose_relation(const std::vector<DerivationStep>& steps) {
    for (const auto& s : steps) {
        if (s.move == "delete") return Relation::Dominance;
    }
    return Relation::Isotopy;
}

Derivation parse_derivation(const std::string& text, const std::string& name) {
    const std::string body = trim(text);
    if (!body.empty() && body[0] == '{') return parse_json_derivation(body, name);

    Derivation d;
    d.name = name;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false, have_word = false;
    int cur_n = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("derivation " + name + " line " + std::to_string(lineno) +
                                    ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_header) {
            auto toks = split_ws(t);
            if (toks.size() != 2 || toks[0].rfind("n=", 0) != 0 || toks[1].rfind("claim=", 0) != 0) {
                fail("expected 'n=<int> claim=<isotopy|dominance>'");
            }
            cur_n = std::stoi(toks[0].substr(2));
            d.claimed = parse_claim(toks[1].substr(6));
            have_header = true;
            continue;
        }
        if (!have_word) {
            if (t.rfind("word:", 0) != 0) fail("expected 'word: <braid text>'");
            d.start = parse_braid(trim(t.substr(5)), cur_n);
            have_word = true;
            continue;
        }
        auto arrow = t.find("->");
        if (t.rfind("step ", 0) != 0 || arrow == std::string::npos) {
            fail("expected 'step <move> <params> -> <braid text>'");
        }
        auto head = split_ws(t.substr(5, arrow - 5));
        if (head.empty()) fail("missing move name");
        DerivationStep st;
        st.move = head[0];
        for (size_t i = 1; i < head.size(); ++i) {
            try {
                st.params.push_back(std::stol(head[i]));
            } catch (const std::exception&) {
                fail("bad parameter '" + head[i] + "'");
            }
        }
        if (st.move == "R1") cur_n -= 1;
        if (cur_n < 2) fail("strand count dropped below 2");
        st.result = parse_braid(trim(t.substr(arrow + 2)), cur_n);
        d.steps.push_back(std::move(st));
    }
    if (!have_header || !have_word) {
        lineno = 0;
        fail("missing header or start word");
    }
    return d;
}

Derivation load_derivation(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_derivation(buf.str(), std::filesystem::path(path).filename().string());
}

CheckResult check(const Derivation& d) {
    Braid w = d.start;
    for (int i = 0; i < static_cast<int>(d.steps.size()); ++i) {
        const DerivationStep& st = d.steps[static_cast<size_t>(i)];
        auto mismatch = [&](const Braid& got) {
            return CheckResult{false, i,
                               "step result mismatch: move " + st.move + " gives " +
                                   braid_text(got) + " (n=" + std::to_string(got.n) +
                                   "), fixture says " + braid_text(st.result) +
                                   " (n=" + std::to_string(st.result.n) + ")"};
        };
        try {
            if (st.move == "eq") {
                if (!monoid_equal(w, st.result)) {
                    return {false, i,
                            "eq step: normal forms of " + braid_text(w) + " and " +
                                braid_text(st.result) + " differ"};
                }
                w = st.result;
                continue;
            }
            Braid got = w;
            if (st.move == "rho") {
                if (st.params.size() != 1) return {false, i, "rho needs one offset"};
                got = cyclic_rotate(w, st.params[0]);
            } else if (st.move == "R3") {
                if (st.params.size() != 1) return {false, i, "R3 needs one position"};
                got = r3_move(w, static_cast<int>(st.params[0]));
            } else if (st.move == "c") {
                if (st.params.size() != 1) return {false, i, "c needs one position"};
                got = commute_move(w, static_cast<int>(st.params[0]));
            } else if (st.move == "R1") {
                auto red = markov_destabilize(w);
                if (!red) return {false, i, "destabilization does not apply"};
                got = *red;
            } else if (st.move == "delete") {
                std::vector<int> ps(st.params.begin(), st.params.end());
                got = delete_letters(w, ps);
            } else if (st.move == "oppo") {
                got = opposite(w);
            } else {
                return {false, i, "unknown move '" + st.move + "'"};
            }
            if (!(got == st.result)) return mismatch(got);
            w = std::move(got);
        } catch (const std::exception& e) {
            return {false, i, std::string("move failed: ") + e.what()};
        }
    }
    if (compose_relation(d.steps) != d.claimed) {
        return {false, -1, "composite relation does not match the claim"};
    }
    return {};
}

EndpointReport endpoint_quiver_report(const Derivation& d, int cap) {
    CheckResult cr = check(d);
    if (!cr.ok) {
        throw std::invalid_argument("derivation " + d.name + " fails at step " +
                                    std::to_string(cr.step) + ": " + cr.reason);
    }
    const Braid& end = d.steps.empty() ? d.start : d.steps.back().result;
    EndpointReport rep;
    ExchangeMatrix bs = brick_matrix(d.start);
    ExchangeMatrix be = brick_matrix(end);
    rep.start_types = recognize(bs);
    rep.end_types = recognize(be);
    rep.start_acyclic = is_acyclic(bs);
    rep.end_acyclic = is_acyclic(be);
    rep.start_verdict = is_finite_type(bs, cap);
    rep.end_verdict = is_finite_type(be, cap);
    return rep;
}

std::vector<CorpusEntry> run_corpus(const std::string& dir, int jobs) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (!e.is_regular_file()) continue;
        auto ext = e.path().extension().string();
        if (ext == ".txt" || ext == ".json") files.push_back(e.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> out(files.size());
    auto work = [&](size_t start, size_t stride) {
        for (size_t i = start; i < files.size(); i += stride) {
            CorpusEntry ent;
            ent.file = fs::path(files[i]).filename().string();
            std::string stem = fs::path(files[i]).stem().string();
            ent.expected_fail = stem.size() >= 4 && stem.rfind("-bad") == stem.size() - 4;
            try {
                Derivation d = load_derivation(files[i]);
                ent.result = check(d);
            } catch (const std::exception& e) {
                ent.result = {false, -1, std::string("load: ") + e.what()};
            }
            ent.passed = ent.expected_fail ? !ent.result.ok : ent.result.ok;
            out[i] = std::move(ent);
        }
    };
    const size_t nthreads = std::max(1, std::min(jobs, static_cast<int>(files.size())));
    if (nthreads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(work, t, nthreads);
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace braidbrick
