#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "tutte/bipoly.hpp"

namespace tutte::testing {

inline BiPoly make_bipoly(std::vector<std::tuple<int, int, long long>> terms) {
    BiPoly p;
    for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
    return p;
}

// The triangular reference table for 1 <= r <= n <= 5, frozen coefficient
// for coefficient. The (5,1) entry is the Tutte polynomial of K_5; its y^5
// coefficient is 4 (the evaluation at (1,1) has to give the 5^3 = 125
// spanning trees of K_5, and the brute-force expansion agrees).
inline std::map<std::pair<int, int>, BiPoly> reference_table() {
    std::map<std::pair<int, int>, BiPoly> t;
    t[{1, 1}] = make_bipoly({{0, 0, 1}});
    t[{2, 1}] = make_bipoly({{1, 0, 1}});
    t[{2, 2}] = make_bipoly({{0, 0, 1}});
    t[{3, 1}] = make_bipoly({{1, 0, 1}, {0, 1, 1}, {2, 0, 1}});
    t[{3, 2}] = make_bipoly({{1, 0, 1}, {0, 1, 1}});
    t[{3, 3}] = make_bipoly({{0, 0, 1}});
    t[{4, 1}] = make_bipoly(
        {{1, 0, 2}, {0, 1, 2}, {2, 0, 3}, {1, 1, 4}, {0, 2, 3}, {3, 0, 1}, {0, 3, 1}});
    t[{4, 2}] = make_bipoly(
        {{1, 0, 1}, {0, 1, 1}, {2, 0, 1}, {1, 1, 2}, {0, 2, 2}, {0, 3, 1}});
    t[{4, 3}] = make_bipoly({{1, 0, 1}, {0, 1, 1}, {0, 2, 1}});
    t[{4, 4}] = make_bipoly({{0, 0, 1}});
    t[{5, 1}] = make_bipoly({{1, 0, 6},
                             {0, 1, 6},
                             {2, 0, 11},
                             {1, 1, 20},
                             {0, 2, 15},
                             {3, 0, 6},
                             {2, 1, 10},
                             {1, 2, 15},
                             {0, 3, 15},
                             {4, 0, 1},
                             {1, 3, 5},
                             {0, 4, 10},
                             {0, 5, 4},
                             {0, 6, 1}});
    t[{5, 2}] = make_bipoly({{1, 0, 2},
                             {0, 1, 2},
                             {2, 0, 3},
                             {1, 1, 7},
                             {0, 2, 6},
                             {3, 0, 1},
                             {2, 1, 3},
                             {1, 2, 6},
                             {0, 3, 7},
                             {1, 3, 3},
                             {0, 4, 6},
                             {0, 5, 3},
                             {0, 6, 1}});
    t[{5, 3}] = make_bipoly({{1, 0, 1},
                             {0, 1, 1},
                             {2, 0, 1},
                             {1, 1, 2},
                             {0, 2, 2},
                             {1, 2, 2},
                             {0, 3, 3},
                             {0, 4, 2},
                             {0, 5, 1}});
    t[{5, 4}] = make_bipoly({{1, 0, 1}, {0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    t[{5, 5}] = make_bipoly({{0, 0, 1}});
    return t;
}

}  // namespace tutte::testing
