#pragma once

#include <vector>

#include "braidbrick/braid.hpp"
#include "braidbrick/quiver.hpp"

namespace braidbrick {

struct StandardLink {
    DynkinType type;
    Braid word;
    bool operator==(const StandardLink&) const = default;
};

// A_r -> s_1^{r+1}; D_r -> s_1^{r-2} s_2 s_1^2 s_2; E_r -> s_1^{r-3} s_2 s_1^3 s_2.
// Throws for anything outside {A_r, D_r (r >= 4), E6, E7, E8}.
Braid standard_link_word(const DynkinType& t);

// closure component count of the standard link:
// A: odd rank 2, even rank 1; D: even rank 3, odd rank 2; E6/E8 1, E7 2
int expected_components(const DynkinType& t);

struct ComponentRow {
    DynkinType type;
    int computed = 0;
    int expected = 0;
    bool ok = false;
};

struct ComponentReport {
    std::vector<ComponentRow> rows;
    bool all_ok = true;
};

// checks components(standard_link_word(t)) against the table for
// A_1..A_max_rank, D_4..D_max_rank, E6, E7, E8
ComponentReport component_table_check(int max_rank = 12);

}  // namespace braidbrick
