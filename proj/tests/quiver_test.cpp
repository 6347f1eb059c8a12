#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "braidbrick/brick.hpp"
#include "braidbrick/quiver.hpp"

using namespace braidbrick;

namespace {

ExchangeMatrix from_arrows(int size, const std::vector<std::pair<int, int>>& arrows) {
    ExchangeMatrix m = zero_matrix(size);
    for (auto [s, t] : arrows) {
        m.b[static_cast<size_t>(s)][static_cast<size_t>(t)] += 1;
        m.b[static_cast<size_t>(t)][static_cast<size_t>(s)] -= 1;
    }
    return m;
}

}  // namespace

TEST_CASE("mutation rule") {
    ExchangeMatrix a2 = from_arrows(2, {{0, 1}});
    auto mu = mutate(a2, 0);
    CHECK(mu.b == std::vector<std::vector<int>>{{0, -1}, {1, 0}});
    CHECK(mutate(mu, 0) == a2);

    // path 0 -> 1 -> 2, mutate the middle: arrows flip and a chord appears
    ExchangeMatrix a3 = from_arrows(3, {{0, 1}, {1, 2}});
    auto m1 = mutate(a3, 1);
    CHECK(m1.b[0][1] == -1);
    CHECK(m1.b[1][2] == -1);
    CHECK(m1.b[0][2] == 1);
    CHECK(mutate_path(a3, {1, 1}) == a3);

    ExchangeMatrix bad;
    bad.size = 2;
    bad.b = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(check_skew(bad), std::invalid_argument);
    CHECK_THROWS_AS(mutate(a2, 5), std::invalid_argument);
}

TEST_CASE("acyclicity and topological order") {
    ExchangeMatrix path = from_arrows(3, {{0, 1}, {1, 2}});
    CHECK(is_acyclic(path));
    CHECK(topological_order(path) == std::vector<int>{0, 1, 2});

    ExchangeMatrix back = from_arrows(3, {{2, 1}, {1, 0}});
    CHECK(topological_order(back) == std::vector<int>{2, 1, 0});

    ExchangeMatrix tri = from_arrows(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(is_acyclic(tri));
    CHECK_FALSE(topological_order(tri).has_value());
}

TEST_CASE("shape recognition") {
    CHECK(recognize(from_arrows(1, {})) ==
          std::vector<DynkinType>{{Family::A, 1}});
    CHECK(recognize(from_arrows(3, {{0, 1}, {2, 1}})) ==
          std::vector<DynkinType>{{Family::A, 3}});
    // star with three leaves
    CHECK(recognize(from_arrows(4, {{0, 1}, {2, 1}, {3, 1}})) ==
          std::vector<DynkinType>{{Family::D, 4}});
    // legs 1,2,2 around the branch vertex
    CHECK(recognize(from_arrows(
              6, {{0, 1}, {1, 2}, {2, 3}, {4, 2}, {5, 4}})) ==
          std::vector<DynkinType>{{Family::E, 6}});
    // 4-cycle underlying graph: affine A3
    CHECK(recognize(from_arrows(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) ==
          std::vector<DynkinType>{{Family::AffineA, 3}});
    // two components, reported in vertex order
    CHECK(recognize(from_arrows(3, {{0, 1}})) ==
          std::vector<DynkinType>{{Family::A, 2}, {Family::A, 1}});
    // double arrow is not simply laced
    ExchangeMatrix kron = zero_matrix(2);
    kron.b = {{0, 2}, {-2, 0}};
    CHECK(recognize(kron) == std::vector<DynkinType>{{Family::None, 2}});
}

TEST_CASE("canonical form is permutation invariant") {
    ExchangeMatrix m = from_arrows(4, {{0, 1}, {2, 1}, {3, 1}});
    ExchangeMatrix p = from_arrows(4, {{3, 0}, {1, 0}, {2, 0}});
    CHECK(canonical_form(m) == canonical_form(p));
    CHECK(canonical_form(m) != canonical_form(from_arrows(4, {{0, 1}, {1, 2}, {2, 3}})));
    // direction matters
    CHECK(canonical_form(from_arrows(2, {{0, 1}})) ==
          canonical_form(from_arrows(2, {{1, 0}})));
}

TEST_CASE("component split") {
    ExchangeMatrix m = from_arrows(5, {{0, 2}, {2, 4}, {1, 3}});
    auto comps = connected_components(m);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 2, 4});
    CHECK(comps[1] == std::vector<int>{1, 3});
    auto sub = submatrix(m, comps[1]);
    CHECK(sub.size == 2);
    CHECK(sub.b[0][1] == 1);
}

TEST_CASE("finite type search") {
    auto fin = is_finite_type(from_arrows(3, {{0, 1}, {1, 2}}));
    CHECK(fin.kind == TypeVerdict::Kind::Finite);
    CHECK(fin.types == std::vector<DynkinType>{{Family::A, 3}});
    CHECK(mutate_path(from_arrows(3, {{0, 1}, {1, 2}}), fin.path) == fin.terminal);

    ExchangeMatrix kron = zero_matrix(2);
    kron.b = {{0, 2}, {-2, 0}};
    CHECK(is_finite_type(kron).kind == TypeVerdict::Kind::Infinite);

    // affine D5 from the alternating word: infinite with a replayable path
    auto inf = is_finite_type(brick_matrix(parse_braid("s1^2 s2^2 s1^2 s2^2")));
    CHECK(inf.kind == TypeVerdict::Kind::Infinite);
    auto term = mutate_path(brick_matrix(parse_braid("s1^2 s2^2 s1^2 s2^2")), inf.path);
    CHECK(term == inf.terminal);
    bool has_big = false;
    for (const auto& row : term.b)
        for (int v : row) has_big = has_big || std::abs(v) >= 2;
    CHECK(has_big);

    auto capped = is_finite_type(brick_matrix(parse_braid("s1^3 s2 s1^3 s2")), 5);
    CHECK(capped.kind == TypeVerdict::Kind::Indeterminate);
}

TEST_CASE("mutation class sizes") {
    CHECK(mutation_class(from_arrows(2, {{0, 1}}), 100).forms.size() == 1);
    auto a3 = mutation_class(from_arrows(3, {{0, 1}, {1, 2}}), 1000);
    CHECK(a3.complete);
    CHECK(a3.forms.size() == 4);
    auto e8 = mutation_class(brick_matrix(parse_braid("s1^5 s2 s1^3 s2")), 100000);
    CHECK(e8.complete);
    CHECK(e8.forms.size() == 1574);

    auto capped = mutation_class(brick_matrix(parse_braid("s1^2 s2^2 s1^2 s2^2")), 10);
    CHECK_FALSE(capped.complete);
}
