#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "braidbrick/brick.hpp"
#include "braidbrick/classify.hpp"

using namespace braidbrick;

namespace {

std::vector<Braid> all_words(int n, int len) {
    std::vector<Braid> out;
    std::vector<int> letters(len, 1);
    while (true) {
        out.push_back(make_braid(n, letters));
        int i = len - 1;
        while (i >= 0 && letters[i] == n - 1) letters[i--] = 1;
        if (i < 0) break;
        ++letters[i];
    }
    return out;
}

std::vector<DynkinType> sorted_types(const LinkDecomposition& d) {
    std::vector<DynkinType> ts;
    for (const auto& f : d.factors)
        for (const auto& l : f) ts.push_back(l.type);
    std::sort(ts.begin(), ts.end());
    return ts;
}

}  // namespace

TEST_CASE("split by empty level") {
    auto sr = split_decompose(parse_braid("s1^3 s3^3", 4));
    CHECK(sr.unknots == 0);
    REQUIRE(sr.groups.size() == 2);
    auto fw = sr.factor_words();
    REQUIRE(fw.size() == 2);
    REQUIRE(fw[0].size() == 1);
    REQUIRE(fw[1].size() == 1);
    CHECK(fw[0][0] == make_braid(2, {1, 1, 1}));
    CHECK(fw[1][0] == make_braid(2, {1, 1, 1}));

    // replaying the recorded cuts reproduces the piece list
    auto pieces = apply_trace(parse_braid("s1^3 s3^3", 4), sr.trace);
    CHECK(pieces == sr.pieces);
}

TEST_CASE("splice at a lone letter") {
    auto sr = split_decompose(parse_braid("s1^3 s2 s3^3", 4));
    CHECK(sr.unknots == 0);
    REQUIRE(sr.groups.size() == 1);
    REQUIRE(sr.groups[0].size() == 2);
    auto fw = sr.factor_words();
    CHECK(fw[0][0] == make_braid(2, {1, 1, 1}));
    CHECK(fw[0][1] == make_braid(2, {1, 1, 1}));
}

TEST_CASE("empty word is an unlink") {
    auto sr = split_decompose(Braid{4, {}});
    CHECK(sr.unknots == 4);
    CHECK(sr.groups.empty());
}

TEST_CASE("strand reduction") {
    auto r = reduce_strands(parse_braid("s1 s2 s1^2 s2^3"));
    REQUIRE(r.has_value());
    CHECK(r->word.n == 2);
    CHECK(r->word.letters == std::vector<int>(6, 1));
    auto replay = apply_trace(parse_braid("s1 s2 s1^2 s2^3"), r->steps);
    REQUIRE(replay.size() == 1);
    CHECK(replay[0] == r->word);

    CHECK_FALSE(reduce_strands(parse_braid("s1^2 s2^2 s1^2 s2^2")).has_value());

    auto triv = reduce_strands(parse_braid("s1 s2", 3));
    REQUIRE(triv.has_value());
    CHECK(triv->word.n == 2);
}

TEST_CASE("three strand normalization") {
    CHECK(normalize_3strand(parse_braid("s1^3 s2 s1^2 s2^2")) ==
          parse_braid("s1^3 s2 s1^3 s2"));
    CHECK(normalize_3strand(parse_braid("s1^3 s2^2 s1^2 s2")) ==
          parse_braid("s1^3 s2 s1^3 s2"));
    CHECK(normalize_3strand(parse_braid("s1^2 s2 s1^2 s2")) ==
          parse_braid("s1^2 s2 s1^2 s2"));

    // infinite type and wrong strand count are rejected
    CHECK_THROWS_AS(normalize_3strand(parse_braid("s1^2 s2^2 s1^2 s2^2")),
                    std::invalid_argument);
    CHECK_THROWS_AS(normalize_3strand(parse_braid("s1^4")), std::invalid_argument);
}

TEST_CASE("finite verdicts land on standard words") {
    for (const char* txt : {"s1^3 s2 s1^2 s2", "s1^3 s2 s1^3 s2", "s1^5"}) {
        Braid w = parse_braid(txt);
        auto v = classify(w);
        REQUIRE(v.kind == ClassifyVerdict::Kind::Finite);
        CHECK(v.note.empty());
        CHECK(v.decomposition.unknots == 0);
        REQUIRE(v.decomposition.factors.size() == 1);
        REQUIRE(v.decomposition.factors[0].size() == 1);
        auto pieces = apply_trace(w, v.trace);
        REQUIRE(pieces.size() == 1);
        CHECK(pieces[0] == v.decomposition.factors[0][0].word);
    }
    auto d5 = classify(parse_braid("s1^3 s2 s1^2 s2"));
    CHECK(d5.decomposition.factors[0][0].type == DynkinType{Family::D, 5});
}

TEST_CASE("split verdict with an unknot") {
    Braid w = make_braid(5, {1, 1, 1, 1, 4, 4, 4});
    auto v = classify(w);
    REQUIRE(v.kind == ClassifyVerdict::Kind::Finite);
    CHECK(v.decomposition.unknots == 1);
    REQUIRE(v.decomposition.factors.size() == 2);
    CHECK(v.decomposition.factors[0][0].type == DynkinType{Family::A, 3});
    CHECK(v.decomposition.factors[1][0].type == DynkinType{Family::A, 2});

    // every summand's standard word appears among the replayed pieces
    auto pieces = apply_trace(w, v.trace);
    for (const auto& f : v.decomposition.factors)
        for (const auto& l : f)
            CHECK(std::find(pieces.begin(), pieces.end(), l.word) != pieces.end());

    // idempotence on the reconstruction
    Braid back = reconstruct_word(v.decomposition);
    CHECK(components(back) == components(w));
    auto v2 = classify(back);
    REQUIRE(v2.kind == ClassifyVerdict::Kind::Finite);
    CHECK(v2.decomposition.unknots == v.decomposition.unknots);
    CHECK(sorted_types(v2.decomposition) == sorted_types(v.decomposition));
}

TEST_CASE("infinite verdicts carry a verified witness") {
    auto v = classify(parse_braid("s1^6 s2 s1^3 s2"));
    REQUIRE(v.kind == ClassifyVerdict::Kind::Infinite);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == parse_braid("s1^6 s2 s1^3 s2"));
    CHECK(v.trace.empty());

    Braid dom = make_braid(4, {1, 1, 2, 1, 3, 2, 1, 1, 2, 3, 3, 2});
    auto vd = classify(dom);
    REQUIRE(vd.kind == ClassifyVerdict::Kind::Infinite);
    REQUIRE(vd.witness.has_value());
    CHECK(is_acyclic(brick_matrix(*vd.witness)));
    CHECK(is_finite_type(brick_matrix(*vd.witness)).kind ==
          TypeVerdict::Kind::Infinite);
    auto pieces = apply_trace(dom, vd.trace);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0] == *vd.witness);

    // the two-block ladder has no dominated witness in the pattern families
    auto vl = classify(parse_braid("s1^2 s2 s1^2 s2 s3^2 s2 s3^2 s2"));
    REQUIRE(vl.kind == ClassifyVerdict::Kind::Infinite);
    CHECK_FALSE(vl.witness.has_value());
    CHECK(vl.note == "no dominated witness pattern found; mutation certificate only");
}

TEST_CASE("indeterminate on a tiny cap") {
    auto v = classify(parse_braid("s1^5 s2 s1^3 s2"), 5);
    CHECK(v.kind == ClassifyVerdict::Kind::Indeterminate);
    CHECK(v.note == "mutation search hit its node cap");
}

TEST_CASE("verdicts agree with the quiver engine on three strands") {
    for (int len = 1; len <= 7; ++len)
        for (const auto& w : all_words(3, len)) {
            auto engine = is_finite_type(brick_matrix(w));
            auto v = classify(w);
            REQUIRE(v.kind != ClassifyVerdict::Kind::Indeterminate);
            CHECK((v.kind == ClassifyVerdict::Kind::Finite) ==
                  (engine.kind == TypeVerdict::Kind::Finite));
            if (v.kind == ClassifyVerdict::Kind::Finite) {
                auto got = sorted_types(v.decomposition);
                auto want = engine.types;
                std::sort(want.begin(), want.end());
                CHECK(got == want);
            }
        }
}

TEST_CASE("verdict names") {
    CHECK(std::string(verdict_name(ClassifyVerdict::Kind::Finite)) == "finite");
    CHECK(std::string(verdict_name(ClassifyVerdict::Kind::Infinite)) == "infinite");
    CHECK(std::string(verdict_name(ClassifyVerdict::Kind::Indeterminate)) ==
          "indeterminate");
}
