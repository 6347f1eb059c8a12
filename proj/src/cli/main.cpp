#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "braidbrick/jsonio.hpp"
#include "braidbrick/normal_form.hpp"

namespace {

using braidbrick::Braid;
using nlohmann::json;

// argv-level problems after CLI11 parsing (bad word text, bad format)
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> word_parts;
    std::vector<std::string> files;
    int n = 0;  // 0 = infer from the word
    int iters = 50;
    int m_max = 10;
    int cap = 100000;
    int jobs = 1;
    std::string format = "json";
    bool endpoints = false;
};

Braid parse_word(const Options& o) {
    std::string text;
    for (const auto& part : o.word_parts) {
        if (!text.empty()) text += ' ';
        text += part;
    }
    try {
        return braidbrick::parse_braid(
            text, o.n > 0 ? std::optional<int>(o.n) : std::nullopt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad braid word: ") + e.what());
    }
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (o.format == a) return;
    throw UsageError("unsupported --format " + o.format + " for this subcommand");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string group_text(const std::vector<braidbrick::StandardLink>& g) {
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += " # ";
        s += braidbrick::type_name(g[i].type);
    }
    return s;
}

std::string decomposition_text(const braidbrick::LinkDecomposition& d) {
    std::string s = "[";
    bool first = true;
    for (const auto& g : d.factors) {
        if (!first) s += " | ";
        s += group_text(g);
        first = false;
    }
    for (int i = 0; i < d.unknots; ++i) {
        if (!first) s += " | ";
        s += "unknot";
        first = false;
    }
    return s + "]";
}

int cmd_parse(const Options& o) {
    require_format(o, {"json", "text"});
    Braid w = parse_word(o);
    auto genus = braidbrick::filling_genus(w);
    if (o.format == "text") {
        std::cout << "word: " << braidbrick::braid_text(w) << "\n"
                  << "n: " << w.n << "\n"
                  << "length: " << w.letters.size() << "\n"
                  << "components: " << braidbrick::components(w) << "\n"
                  << "tb: " << braidbrick::tb(w) << "\n"
                  << "b1: " << braidbrick::filling_b1(w) << "\n";
        if (genus) std::cout << "genus: " << *genus << "\n";
        return 0;
    }
    json j{{"braid", braidbrick::braid_json(w)},
           {"text", braidbrick::braid_text(w)},
           {"length", w.letters.size()},
           {"components", braidbrick::components(w)},
           {"tb", braidbrick::tb(w)},
           {"b1", braidbrick::filling_b1(w)}};
    j["genus"] = genus ? json(*genus) : json(nullptr);
    emit(j);
    return 0;
}

int cmd_quiver(const Options& o) {
    require_format(o, {"json", "text", "dot"});
    Braid w = parse_word(o);
    auto q = braidbrick::extract_quiver(w);
    if (o.format == "dot") {
        std::cout << braidbrick::quiver_dot(q);
        return 0;
    }
    auto m = braidbrick::to_matrix(q);
    auto types = braidbrick::recognize(m);
    if (o.format == "text") {
        std::cout << "vertices: " << q.bricks.size() << "\n";
        for (const auto& b : q.bricks)
            std::cout << "  level " << b.level << " bars " << b.left << ".."
                      << b.right << "\n";
        std::cout << "arrows:";
        for (auto [s, t] : q.arrows) std::cout << " " << s << "->" << t;
        std::cout << "\nacyclic: " << (braidbrick::is_acyclic(m) ? "yes" : "no")
                  << "\nrecognized:";
        for (const auto& t : types) std::cout << " " << braidbrick::type_name(t);
        std::cout << "\n";
        return 0;
    }
    json j{{"quiver", braidbrick::quiver_json(q)},
           {"matrix", braidbrick::matrix_json(m)},
           {"acyclic", braidbrick::is_acyclic(m)},
           {"recognized", braidbrick::types_json(types)}};
    emit(j);
    return 0;
}

int cmd_render(const Options& o) {
    require_format(o, {"json", "text"});
    Braid w = parse_word(o);
    std::string art = braidbrick::render_ascii(w);
    if (o.format == "text") {
        std::cout << art;
        return 0;
    }
    emit(json{{"ascii", art}});
    return 0;
}

int cmd_classify(const Options& o) {
    require_format(o, {"json", "text"});
    Braid w = parse_word(o);
    auto v = braidbrick::classify(w, o.cap);
    if (o.format == "text") {
        std::cout << braidbrick::verdict_name(v.kind);
        if (v.kind == braidbrick::ClassifyVerdict::Kind::Finite)
            std::cout << " " << decomposition_text(v.decomposition);
        if (v.witness)
            std::cout << " witness: " << braidbrick::braid_text(*v.witness);
        std::cout << "\n";
        if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
    } else {
        emit(braidbrick::classify_json(v));
    }
    return v.kind == braidbrick::ClassifyVerdict::Kind::Indeterminate ? 1 : 0;
}

int cmd_dt_orbit(const Options& o) {
    require_format(o, {"json", "text"});
    Braid w = parse_word(o);
    auto m = braidbrick::brick_matrix(w);
    auto rep = braidbrick::dt_orbit(m, o.iters);
    if (o.format == "text") {
        for (std::size_t i = 0; i < rep.numerator_bits.size(); ++i)
            std::cout << "iter " << i + 1 << ": num_bits=" << rep.numerator_bits[i]
                      << " den_bits=" << rep.denominator_bits[i] << "\n";
        if (rep.period)
            std::cout << "period: " << *rep.period << " offset: " << rep.offset
                      << "\n";
        else
            std::cout << "no period within " << o.iters << " iterations\n";
        return 0;
    }
    emit(braidbrick::orbit_json(rep));
    return 0;
}

int cmd_fillings(const Options& o) {
    require_format(o, {"json", "text"});
    Braid w = parse_word(o);
    auto f = braidbrick::filling_seeds(w, o.m_max);
    if (o.format == "text") {
        std::cout << "seeds: " << f.seeds.size() << "\n";
        if (f.first_repeat)
            std::cout << "first repeat: (" << f.first_repeat->first << ", "
                      << f.first_repeat->second << ")\n";
        else
            std::cout << "pairwise distinct\n";
        return 0;
    }
    emit(braidbrick::fillings_json(f));
    return 0;
}

int cmd_check_derivation(const Options& o) {
    require_format(o, {"json", "text"});
    bool all_ok = true;
    json out = json::array();
    for (const auto& file : o.files) {
        braidbrick::Derivation d;
        braidbrick::CheckResult r;
        try {
            d = braidbrick::load_derivation(file);
            r = braidbrick::check(d);
        } catch (const std::exception& e) {
            r.ok = false;
            r.step = -1;
            r.reason = std::string("load: ") + e.what();
            d.name = file;
        }
        all_ok = all_ok && r.ok;
        if (o.format == "text") {
            if (r.ok)
                std::cout << file << ": ok\n";
            else
                std::cout << file << ": FAIL step " << r.step << ": " << r.reason
                          << "\n";
        }
        json entry = braidbrick::derivation_check_json(d, r);
        entry["file"] = file;
        if (r.ok && o.endpoints) {
            auto rep = braidbrick::endpoint_quiver_report(d, o.cap);
            entry["endpoints"] = braidbrick::endpoint_report_json(rep);
            if (o.format == "text")
                std::cout << "  endpoints: " << entry["endpoints"].dump() << "\n";
        }
        out.push_back(entry);
    }
    if (o.format == "json") emit(out);
    return all_ok ? 0 : 1;
}

int cmd_normal_form(const Options& o) {
    require_format(o, {"json", "text"});
    Braid w = parse_word(o);
    auto nf = braidbrick::greedy_normal_form(w);
    if (o.format == "text") {
        std::cout << "factors: " << nf.factors.size() << "\n";
        for (const auto& p : nf.factors) {
            std::cout << " ";
            for (int v : p) std::cout << " " << v;
            std::cout << "\n";
        }
        return 0;
    }
    emit(json{{"n", nf.n}, {"factors", nf.factors}});
    return 0;
}

std::vector<braidbrick::DynkinType> table_types(int max_rank) {
    std::vector<braidbrick::DynkinType> ts;
    for (int r = 1; r <= max_rank; ++r)
        ts.push_back({braidbrick::Family::A, r});
    for (int r = 4; r <= max_rank; ++r)
        ts.push_back({braidbrick::Family::D, r});
    for (int r = 6; r <= 8; ++r) ts.push_back({braidbrick::Family::E, r});
    return ts;
}

int cmd_standard_links(const Options& o) {
    require_format(o, {"json", "text"});
    json rows = json::array();
    for (const auto& t : table_types(12)) {
        Braid w = braidbrick::standard_link_word(t);
        if (o.format == "text") {
            std::cout << braidbrick::type_name(t) << ": "
                      << braidbrick::braid_text(w) << "  n=" << w.n
                      << " tb=" << braidbrick::tb(w)
                      << " components=" << braidbrick::components(w) << "\n";
        } else {
            rows.push_back({{"type", braidbrick::type_name(t)},
                            {"word", braidbrick::braid_json(w)},
                            {"text", braidbrick::braid_text(w)},
                            {"tb", braidbrick::tb(w)},
                            {"components", braidbrick::components(w)}});
        }
    }
    if (o.format == "json") emit(rows);
    return 0;
}

int cmd_component_table(const Options& o) {
    require_format(o, {"json", "text"});
    auto rep = braidbrick::component_table_check(12);
    if (o.format == "text") {
        for (const auto& row : rep.rows)
            std::cout << braidbrick::type_name(row.type) << ": computed "
                      << row.computed << " expected " << row.expected << " "
                      << (row.ok ? "ok" : "MISMATCH") << "\n";
        std::cout << (rep.all_ok ? "all ok" : "mismatches found") << "\n";
    } else {
        emit(braidbrick::component_report_json(rep));
    }
    return rep.all_ok ? 0 : 1;
}

int run_seed_fixtures(int jobs) {
    auto entries =
        braidbrick::run_corpus(std::string(BB_DATA_DIR) + "/derivations", jobs);
    bool all = true;
    for (const auto& e : entries) {
        all = all && e.passed;
        std::cout << e.file << (e.expected_fail ? " (expected fail)" : "") << ": "
                  << (e.passed ? "pass" : "FAIL");
        if (!e.result.ok)
            std::cout << " [step " << e.result.step << ": " << e.result.reason
                      << "]";
        std::cout << "\n";
    }
    std::cout << entries.size() << " fixtures, "
              << (all ? "all passed" : "FAILURES present") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"brick quivers of positive braid words: mutation type, DT "
                 "orbits, filling seeds, link classification"};
    app.require_subcommand(0, 1);

    Options o;
    if (const char* env = std::getenv("BRAIDBRICK_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) o.jobs = j;
    }
    bool seed_fixtures = false;
    app.add_flag("--seed-fixtures", seed_fixtures,
                 "check the bundled derivation corpus and exit");
    app.add_option("--jobs", o.jobs, "worker cap for parallel subcommands")
        ->check(CLI::PositiveNumber);

    auto add_word = [&](CLI::App* sc) {
        sc->add_option("word", o.word_parts, "positive braid word, e.g. \"s1^2 s2\"")
            ->required()
            ->expected(-1);
        sc->add_option("--n", o.n, "strand count override")
            ->check(CLI::PositiveNumber);
    };
    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", o.format, "json, text or dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
    };

    int rc = 0;
    auto wire = [&](CLI::App* sc, int (*fn)(const Options&), bool word,
                    bool format) {
        if (word) add_word(sc);
        if (format) add_format(sc);
        sc->callback([&o, fn, &rc]() { rc = fn(o); });
        return sc;
    };

    wire(app.add_subcommand("parse", "echo the parsed word and its closure data"),
         cmd_parse, true, true);
    wire(app.add_subcommand("quiver", "brick quiver, exchange matrix, recognition"),
         cmd_quiver, true, true);
    wire(app.add_subcommand("render", "ASCII brick diagram"), cmd_render, true,
         true);
    auto* sc_classify =
        wire(app.add_subcommand("classify", "finite/infinite link classification"),
             cmd_classify, true, true);
    sc_classify->add_option("--cap", o.cap, "mutation search node cap")
        ->check(CLI::PositiveNumber);
    auto* sc_dt = wire(app.add_subcommand("dt-orbit", "iterate the DT mutation"),
                       cmd_dt_orbit, true, true);
    sc_dt->add_option("--iters", o.iters, "iteration budget")
        ->check(CLI::PositiveNumber);
    auto* sc_fill =
        wire(app.add_subcommand("fillings", "cluster seeds of the fillings"),
             cmd_fillings, true, true);
    sc_fill->add_option("--m-max", o.m_max, "largest twist parameter")
        ->check(CLI::NonNegativeNumber);
    auto* sc_check = app.add_subcommand("check-derivation",
                                        "replay rewrite chains from files");
    sc_check->add_option("files", o.files, "derivation files")
        ->required()
        ->expected(-1);
    sc_check->add_option("--cap", o.cap, "mutation search node cap")
        ->check(CLI::PositiveNumber);
    sc_check->add_flag("--endpoints", o.endpoints,
                       "also report endpoint quiver types");
    add_format(sc_check);
    sc_check->callback([&]() { rc = cmd_check_derivation(o); });
    wire(app.add_subcommand("normal-form", "left-greedy normal form"),
         cmd_normal_form, true, true);
    wire(app.add_subcommand("standard-links", "table of standard words"),
         cmd_standard_links, false, true);
    wire(app.add_subcommand("component-table",
                            "check closure component counts for the table"),
         cmd_component_table, false, true);

    try {
        app.parse(argc, argv);
        if (seed_fixtures) return run_seed_fixtures(o.jobs);
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 2;
        }
        return rc;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
