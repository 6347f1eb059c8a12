#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidbrick/brick.hpp"
#include "braidbrick/cluster.hpp"

using namespace braidbrick;

namespace {

ExchangeMatrix arrow01() {
    ExchangeMatrix m = zero_matrix(2);
    m.b = {{0, 1}, {-1, 0}};
    return m;
}

}  // namespace

TEST_CASE("seed mutation exchange") {
    Seed s = unit_seed(arrow01());
    CHECK(s.x == std::vector<Rational>{1, 1});
    CHECK(s.C == std::vector<std::vector<int>>{{1, 0}, {0, 1}});

    // x0' = (x1 + 1) / x0 at the unit point = 2
    Seed t = seed_mutate(s, 0);
    CHECK(t.x == std::vector<Rational>{2, 1});
    CHECK(t.B.b == std::vector<std::vector<int>>{{0, -1}, {1, 0}});
    // c-vector of the mutated vertex flips
    CHECK(t.C[0][0] == -1);

    CHECK(seed_mutate(t, 0).x == s.x);
    CHECK(seed_mutate(t, 0).C == s.C);
    CHECK_THROWS_AS(seed_mutate(s, 7), std::invalid_argument);
}

TEST_CASE("pentagon recurrence") {
    // mutating 0,1,0,1,... from the unit seed of 0 -> 1 cycles through
    // 2, 3, 2 and returns to all ones after five steps
    Seed s = unit_seed(arrow01());
    int k = 0;
    std::vector<std::vector<Rational>> seen;
    for (int i = 0; i < 5; ++i) {
        s = seed_mutate(s, k);
        k = 1 - k;
        seen.push_back(s.x);
    }
    CHECK(seen[0] == std::vector<Rational>{2, 1});
    CHECK(seen[1] == std::vector<Rational>{2, 3});
    CHECK(seen[2] == std::vector<Rational>{2, 3});
    CHECK(seen[4] == std::vector<Rational>{1, 1});
}

TEST_CASE("green order") {
    CHECK(dt_sequence(arrow01()) == std::vector<int>{1, 0});
    CHECK(verify_maximal_green(arrow01(), {1, 0}));
    CHECK_FALSE(verify_maximal_green(arrow01(), {0, 1}));
    CHECK_FALSE(verify_maximal_green(arrow01(), {1}));

    ExchangeMatrix tri = zero_matrix(3);
    tri.b = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    CHECK_THROWS_AS(dt_sequence(tri), std::invalid_argument);

    auto m = brick_matrix(parse_braid("s1^3 s2 s1^3 s2"));
    CHECK(verify_maximal_green(m, dt_sequence(m)));
}

TEST_CASE("dt composition") {
    auto m = brick_matrix(parse_braid("s1^4"));
    Seed s = unit_seed(m);
    Seed fwd = apply_dt(s);
    Seed back = apply_dt_inverse(fwd);
    CHECK(back.x == s.x);
    CHECK(back.B == s.B);
}

TEST_CASE("orbit periodicity") {
    auto rep = dt_orbit(arrow01(), 64);
    REQUIRE(rep.period.has_value());
    CHECK(*rep.period == 5);
    CHECK(rep.offset == 0);

    // trefoil quiver: two vertices, one arrow, same orbit length
    auto tre = dt_orbit(brick_matrix(parse_braid("s1^3")), 64);
    REQUIRE(tre.period.has_value());
    CHECK(*tre.period == 5);

    auto a1 = dt_orbit(brick_matrix(parse_braid("s1^2")), 64);
    REQUIRE(a1.period.has_value());
    CHECK(*a1.period == 2);
}

TEST_CASE("orbit growth") {
    auto m = brick_matrix(parse_braid("s1^2 s2^2 s1^2 s2^2"));
    auto rep = dt_orbit(m, 12);
    CHECK_FALSE(rep.period.has_value());
    REQUIRE(rep.numerator_bits.size() >= 8);
    // the tail grows strictly
    for (size_t i = rep.numerator_bits.size() - 4; i + 1 < rep.numerator_bits.size(); ++i)
        CHECK(rep.numerator_bits[i] < rep.numerator_bits[i + 1]);
}

TEST_CASE("filling seeds distinct and repeating") {
    auto fin = filling_seeds(make_braid(2, {1, 1, 1, 1}), 6);
    REQUIRE(fin.first_repeat.has_value());
    CHECK(*fin.first_repeat == std::pair<int, int>{0, 3});
    CHECK(fin.equivalent[0][3]);
    CHECK(fin.equivalent[3][0]);
    CHECK(fin.equivalent[1][4]);
    CHECK(fin.equivalent[2][5]);
    CHECK_FALSE(fin.equivalent[0][1]);

    auto inf = filling_seeds(parse_braid("s1^2 s2^2 s1^2 s2^2"), 4);
    CHECK(inf.seeds.size() == 5);
    CHECK_FALSE(inf.first_repeat.has_value());
    for (size_t i = 0; i < inf.seeds.size(); ++i)
        for (size_t j = 0; j < inf.seeds.size(); ++j)
            CHECK(inf.equivalent[i][j] == (i == j));
}

TEST_CASE("bit length") {
    using boost::multiprecision::cpp_int;
    CHECK(bit_length(cpp_int(0)) == 0);
    CHECK(bit_length(cpp_int(1)) == 1);
    CHECK(bit_length(cpp_int(8)) == 4);
    CHECK(bit_length(cpp_int(-8)) == 4);
}
