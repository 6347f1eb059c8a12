#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidbrick/brick.hpp"
#include "braidbrick/links.hpp"
#include "braidbrick/quiver.hpp"

using namespace braidbrick;

TEST_CASE("table words") {
    CHECK(standard_link_word({Family::A, 3}) == make_braid(2, {1, 1, 1, 1}));
    CHECK(standard_link_word({Family::A, 1}) == make_braid(2, {1, 1}));
    CHECK(standard_link_word({Family::D, 4}) ==
          make_braid(3, {1, 1, 2, 1, 1, 2}));
    CHECK(standard_link_word({Family::D, 7}) ==
          make_braid(3, {1, 1, 1, 1, 1, 2, 1, 1, 2}));
    CHECK(standard_link_word({Family::E, 6}) ==
          parse_braid("s1^3 s2 s1^3 s2"));
    CHECK(standard_link_word({Family::E, 8}) ==
          parse_braid("s1^5 s2 s1^3 s2"));

    CHECK_THROWS_AS(standard_link_word({Family::D, 3}), std::invalid_argument);
    CHECK_THROWS_AS(standard_link_word({Family::E, 9}), std::invalid_argument);
    CHECK_THROWS_AS(standard_link_word({Family::AffineD, 5}), std::invalid_argument);
}

TEST_CASE("table words hit their quiver type") {
    for (auto t : {DynkinType{Family::A, 5}, DynkinType{Family::D, 6},
                   DynkinType{Family::E, 7}}) {
        auto types = recognize(brick_matrix(standard_link_word(t)));
        REQUIRE(types.size() == 1);
        CHECK(types[0] == t);
    }
}

TEST_CASE("closure component counts") {
    CHECK(expected_components({Family::A, 4}) == 1);
    CHECK(expected_components({Family::A, 3}) == 2);
    CHECK(expected_components({Family::D, 6}) == 3);
    CHECK(expected_components({Family::D, 7}) == 2);
    CHECK(expected_components({Family::E, 6}) == 1);
    CHECK(expected_components({Family::E, 7}) == 2);
    CHECK(expected_components({Family::E, 8}) == 1);

    CHECK(components(standard_link_word({Family::E, 7})) == 2);
    CHECK(components(standard_link_word({Family::D, 6})) == 3);
    CHECK(components(standard_link_word({Family::A, 4})) == 1);
}

TEST_CASE("component report") {
    auto rep = component_table_check(12);
    CHECK(rep.all_ok);
    // A1..A12, D4..D12, E6..E8
    CHECK(rep.rows.size() == 12 + 9 + 3);
    for (const auto& row : rep.rows) {
        CHECK(row.ok);
        CHECK(row.computed == row.expected);
    }
}
