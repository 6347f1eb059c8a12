#include "braidbrick/links.hpp"

#include <stdexcept>

namespace braidbrick {

Braid standard_link_word(const DynkinType& t) {
    switch (t.family) {
        case Family::A:
            if (t.rank >= 1) {
                return make_braid(2, std::vector<int>(static_cast<size_t>(t.rank) + 1, 1));
            }
            break;
        case Family::D:
            if (t.rank >= 4) {
                std::vector<int> w(static_cast<size_t>(t.rank) - 2, 1);
                w.push_back(2);
                w.push_back(1);
                w.push_back(1);
                w.push_back(2);
                return make_braid(3, w);
            }
            break;
        case Family::E:
            if (t.rank >= 6 && t.rank <= 8) {
                std::vector<int> w(static_cast<size_t>(t.rank) - 3, 1);
                w.push_back(2);
                w.push_back(1);
                w.push_back(1);
                w.push_back(1);
                w.push_back(2);
                return make_braid(3, w);
            }
            break;
        default:
            break;
    }
    throw std::invalid_argument("no standard word for " + type_name(t));
}

int expected_components(const DynkinType& t) {
    switch (t.family) {
        case Family::A:
            return (t.rank % 2 == 1) ? 2 : 1;
        case Family::D:
            return (t.rank % 2 == 0) ? 3 : 2;
        case Family::E:
            return t.rank == 7 ? 2 : 1;
        default:
            throw std::invalid_argument("no component count for " + type_name(t));
    }
}

ComponentReport component_table_check(int max_rank) {
    ComponentReport rep;
    std::vector<DynkinType> types;
    for (int r = 1; r <= max_rank; ++r) types.push_back({Family::A, r});
    for (int r = 4; r <= max_rank; ++r) types.push_back({Family::D, r});
    for (int r = 6; r <= 8; ++r) types.push_back({Family::E, r});
    for (const auto& t : types) {
        ComponentRow row;
        row.type = t;
        row.computed = components(standard_link_word(t));
        row.expected = expected_components(t);
        row.ok = row.computed == row.expected;
        rep.rows.push_back(row);
        rep.all_ok = rep.all_ok && row.ok;
    }
    return rep;
}

}  // namespace braidbrick
