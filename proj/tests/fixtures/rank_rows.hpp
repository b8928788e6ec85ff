#pragma once

#include <cstddef>
#include <vector>

// |EP_(n,r)| for n = 1..8, r = 0..C(n,2).
inline const std::vector<std::vector<std::size_t>> kRankRows = {
    {1},
    {1, 1},
    {1, 3, 3, 1},
    {1, 6, 14, 16, 10, 4, 1},
    {1, 10, 40, 85, 110, 97, 65, 35, 15, 5, 1},
    {1, 15, 90, 295, 609, 873, 948, 840, 636, 421, 246, 126, 56, 21, 6, 1},
    {1, 21, 175, 805, 2366, 4872, 7567, 9459, 10031, 9359, 7861, 6027, 4249, 2765, 1661, 917, 462, 210, 84, 28, 7, 1},
    {1,     28,    308,    1876,   7350,  20272, 42090, 69620, 96334, 115980, 125044, 123176, 112380, 95836, 76868,
     58220, 41734, 28344,  18236,  11096, 6364,  3424,  1716,  792,   330,    120,    36,     8,      1},
};

inline const std::vector<std::size_t>& rank_row(int n) { return kRankRows.at(static_cast<std::size_t>(n - 1)); }
