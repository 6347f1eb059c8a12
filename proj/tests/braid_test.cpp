#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidbrick/braid.hpp"

using namespace braidbrick;

TEST_CASE("parse and print") {
    Braid w = parse_braid("s1^3 s2");
    CHECK(w.n == 3);
    CHECK(w.letters == std::vector<int>{1, 1, 1, 2});
    CHECK(braid_text(w) == "s1^3 s2");

    CHECK(parse_braid("11212").letters == std::vector<int>{1, 1, 2, 1, 2});
    CHECK(parse_braid("s1 s1").n == 2);
    CHECK(parse_braid("s1", 4).n == 4);
    CHECK(braid_text(Braid{2, {}}) == "e");
    CHECK(parse_braid("e", 4).letters.empty());

    CHECK_THROWS_AS(parse_braid("s0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("s2^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("s3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("hello"), std::invalid_argument);
    CHECK_THROWS_AS(make_braid(1, {}), std::invalid_argument);
}

TEST_CASE("rotation") {
    Braid w = make_braid(3, {1, 2, 2, 1});
    CHECK(cyclic_rotate(w, 1).letters == std::vector<int>{2, 2, 1, 1});
    CHECK(cyclic_rotate(w, -1).letters == std::vector<int>{1, 1, 2, 2});
    CHECK(cyclic_rotate(w, 4) == w);
    CHECK(cyclic_rotate(w, -7) == cyclic_rotate(w, 1));
    CHECK(cyclic_rotate(Braid{3, {}}, 5).letters.empty());
}

TEST_CASE("triangle and commutation moves") {
    Braid w = make_braid(3, {1, 2, 1, 1});
    CHECK(r3_move(w, 0).letters == std::vector<int>{2, 1, 2, 1});
    CHECK_THROWS_AS(r3_move(w, 1), std::invalid_argument);
    CHECK_THROWS_AS(r3_move(w, 2), std::invalid_argument);

    Braid v = make_braid(4, {1, 3, 2});
    CHECK(commute_move(v, 0).letters == std::vector<int>{3, 1, 2});
    CHECK_THROWS_AS(commute_move(v, 1), std::invalid_argument);
    // involutions
    CHECK(r3_move(r3_move(w, 0), 0) == w);
    CHECK(commute_move(commute_move(v, 0), 0) == v);
}

TEST_CASE("markov destabilization") {
    // top generator unique: drop it, n shrinks, letters keep their index
    auto r = markov_destabilize(make_braid(3, {1, 1, 2, 1}));
    REQUIRE(r.has_value());
    CHECK(r->n == 2);
    CHECK(r->letters == std::vector<int>{1, 1, 1});

    // bottom generator unique: letters shift down
    auto r2 = markov_destabilize(make_braid(3, {2, 1, 2, 2}));
    REQUIRE(r2.has_value());
    CHECK(r2->letters == std::vector<int>{1, 1, 1});

    // top preferred when both are unique
    auto r3 = markov_destabilize(make_braid(4, {1, 2, 2, 3}));
    REQUIRE(r3.has_value());
    CHECK(r3->letters == std::vector<int>{1, 2, 2});

    CHECK_FALSE(markov_destabilize(make_braid(3, {1, 1, 2, 2})).has_value());
    CHECK_FALSE(markov_destabilize(make_braid(2, {1})).has_value());
}

TEST_CASE("delete and opposite") {
    Braid w = make_braid(3, {1, 2, 1, 2, 1});
    CHECK(delete_letters(w, {1, 3}).letters == std::vector<int>{1, 1, 1});
    CHECK(delete_letters(w, {}) == w);
    CHECK_THROWS_AS(delete_letters(w, {5}), std::invalid_argument);
    CHECK_THROWS_AS(delete_letters(w, {0, 0}), std::invalid_argument);

    CHECK(opposite(w).letters == std::vector<int>{1, 2, 1, 2, 1});
    Braid v = make_braid(4, {1, 2, 3});
    CHECK(opposite(v).letters == std::vector<int>{3, 2, 1});
    CHECK(opposite(opposite(v)) == v);
}

TEST_CASE("connect sum and split union") {
    Braid a = make_braid(2, {1, 1});
    Braid b = make_braid(3, {1, 2, 2});
    Braid cs = connect_sum(a, b);
    CHECK(cs.n == 4);
    CHECK(cs.letters == std::vector<int>{1, 1, 2, 3, 3});

    Braid su = split_union(a, b);
    CHECK(su.n == 5);
    CHECK(su.letters == std::vector<int>{1, 1, 3, 4, 4});
    CHECK(components(su) == components(a) + components(b));
    CHECK(components(cs) == components(a) + components(b) - 1);
}

TEST_CASE("subword restriction") {
    Braid w = make_braid(4, {1, 3, 2, 3, 1, 2});
    Braid full = subword_range(w, 2, 3, false);
    CHECK(full.n == 4);
    CHECK(full.letters == std::vector<int>{3, 2, 3, 2});
    Braid re = subword_range(w, 2, 3, true);
    CHECK(re.n == 3);
    CHECK(re.letters == std::vector<int>{2, 1, 2, 1});
    CHECK_THROWS_AS(subword_range(w, 3, 2, false), std::invalid_argument);
}

TEST_CASE("closure permutation and components") {
    CHECK(permutation(make_braid(3, {1, 2})) == std::vector<int>{2, 0, 1});
    CHECK(components(make_braid(3, {1, 2})) == 1);
    CHECK(components(make_braid(2, {1, 1})) == 2);
    CHECK(components(make_braid(2, {1, 1, 1})) == 1);
    // squares cancel in the symmetric group: identity closure, 3 cycles
    CHECK(components(make_braid(3, {1, 1, 2, 2, 1, 1, 2, 2})) == 3);
    CHECK(components(Braid{4, {}}) == 4);
}

TEST_CASE("framing numbers") {
    for (const char* txt : {"s1^4", "s1^2 s2 s1^2 s2", "s1^3 s2 s1^3 s2"}) {
        Braid w = parse_braid(txt);
        CHECK(tb(w) == static_cast<long>(w.letters.size()) - w.n);
        CHECK(filling_b1(w) == tb(w) + 1);
    }
    Braid tre = make_braid(2, {1, 1, 1});
    REQUIRE(filling_genus(tre).has_value());
    CHECK(*filling_genus(tre) == 1);
    // not a knot: genus undefined
    CHECK_FALSE(filling_genus(make_braid(2, {1, 1})).has_value());
}
