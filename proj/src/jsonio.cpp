#include "braidbrick/jsonio.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace braidbrick {

namespace {

using nlohmann::json;

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

json rationals_json(const std::vector<Rational>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(rational_str(x));
    return a;
}

const char* type_verdict_name(TypeVerdict::Kind k) {
    switch (k) {
        case TypeVerdict::Kind::Finite: return "finite";
        case TypeVerdict::Kind::Infinite: return "infinite";
        default: return "indeterminate";
    }
}

}  // namespace

json braid_json(const Braid& w) {
    return json{{"n", w.n}, {"word", w.letters}};
}

Braid braid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("word"))
        throw std::invalid_argument("braid json needs n and word");
    Braid w;
    w.n = j.at("n").get<int>();
    w.letters = j.at("word").get<std::vector<int>>();
    return w;
}

json quiver_json(const BrickQuiver& q) {
    json verts = json::array();
    for (const auto& b : q.bricks)
        verts.push_back({{"level", b.level}, {"left", b.left}, {"right", b.right}});
    json arrows = json::array();
    for (auto [s, t] : q.arrows) arrows.push_back({s, t});
    return json{{"vertices", verts}, {"arrows", arrows}};
}

json matrix_json(const ExchangeMatrix& m) {
    return json{{"size", m.size}, {"b", m.b}};
}

ExchangeMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("b"))
        throw std::invalid_argument("matrix json needs b");
    ExchangeMatrix m;
    m.b = j.at("b").get<std::vector<std::vector<int>>>();
    m.size = static_cast<int>(m.b.size());
    if (j.contains("size") && j.at("size").get<int>() != m.size)
        throw std::invalid_argument("matrix json size disagrees with b");
    for (const auto& row : m.b)
        if (static_cast<int>(row.size()) != m.size)
            throw std::invalid_argument("matrix json b is not square");
    check_skew(m);
    return m;
}

json types_json(const std::vector<DynkinType>& ts) {
    json a = json::array();
    for (const auto& t : ts) a.push_back(type_name(t));
    return a;
}

json verdict_json(const TypeVerdict& v) {
    json j{{"kind", type_verdict_name(v.kind)},
           {"explored", v.explored}};
    if (v.kind != TypeVerdict::Kind::Indeterminate) {
        j["path"] = v.path;
        j["terminal"] = matrix_json(v.terminal);
    }
    if (v.kind == TypeVerdict::Kind::Finite) j["types"] = types_json(v.types);
    return j;
}

json orbit_json(const OrbitReport& r) {
    json j{{"iterations", r.points.empty() ? 0 : r.points.size() - 1},
           {"offset", r.offset}};
    j["period"] = r.period ? json(*r.period) : json(nullptr);
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(rationals_json(p));
    j["points"] = pts;
    j["numerator_bits"] = r.numerator_bits;
    j["denominator_bits"] = r.denominator_bits;
    return j;
}

json fillings_json(const FillingSeeds& f) {
    json seeds = json::array();
    for (std::size_t m = 0; m < f.seeds.size(); ++m)
        seeds.push_back({{"m", m}, {"x", rationals_json(f.seeds[m].x)}});
    bool distinct = !f.first_repeat.has_value();
    json j{{"seeds", seeds}, {"pairwise_distinct", distinct}};
    j["first_repeat"] = f.first_repeat
        ? json{f.first_repeat->first, f.first_repeat->second}
        : json(nullptr);
    return j;
}

json trace_json(const std::vector<TraceStep>& steps) {
    json a = json::array();
    for (const auto& s : steps) {
        json st{{"move", s.move}, {"piece", s.piece}};
        if (s.move == "delete") {
            st["positions"] = s.args;
        } else if (!s.args.empty()) {
            st["pos"] = s.args.front();
        }
        a.push_back(st);
    }
    return a;
}

json decomposition_json(const LinkDecomposition& d) {
    json factors = json::array();
    for (const auto& group : d.factors) {
        json g = json::array();
        for (const auto& link : group)
            g.push_back({{"type", type_name(link.type)},
                         {"word", braid_json(link.word)}});
        factors.push_back(g);
    }
    return json{{"unknots", d.unknots},
                {"factors", factors},
                {"components", decomposition_components(d)}};
}

json classify_json(const ClassifyVerdict& v) {
    json j{{"verdict", verdict_name(v.kind)},
           {"engine", verdict_json(v.engine)},
           {"trace", trace_json(v.trace)}};
    if (v.kind == ClassifyVerdict::Kind::Finite)
        j["decomposition"] = decomposition_json(v.decomposition);
    j["witness"] = v.witness ? braid_json(*v.witness) : json(nullptr);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json derivation_check_json(const Derivation& d, const CheckResult& r) {
    json j{{"name", d.name},
           {"claim", d.claimed == Relation::Dominance ? "dominance" : "isotopy"},
           {"steps", d.steps.size()},
           {"ok", r.ok}};
    if (!r.ok) {
        j["step"] = r.step;
        j["reason"] = r.reason;
    }
    return j;
}

json endpoint_report_json(const EndpointReport& r) {
    auto side = [](const std::vector<DynkinType>& ts, bool acyclic,
                   const TypeVerdict& v) {
        json j{{"types", types_json(ts)},
               {"acyclic", acyclic},
               {"kind", type_verdict_name(v.kind)}};
        return j;
    };
    return json{{"start", side(r.start_types, r.start_acyclic, r.start_verdict)},
                {"end", side(r.end_types, r.end_acyclic, r.end_verdict)}};
}

json component_report_json(const ComponentReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"type", type_name(row.type)},
                        {"computed", row.computed},
                        {"expected", row.expected},
                        {"ok", row.ok}});
    return json{{"rows", rows}, {"all_ok", r.all_ok}};
}

}  // namespace braidbrick
