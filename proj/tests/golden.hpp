#ifndef GAPCOMP_TESTS_GOLDEN_HPP
#define GAPCOMP_TESTS_GOLDEN_HPP

// Published 12x12 leading blocks for g = 2, s = 1.

#include "gapcomp/reciprocity.hpp"

#include <array>

namespace golden {

using Block = std::array<std::array<long, 12>, 12>;

inline constexpr Block mu_2_1 = {{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, -1, -1, -1, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, -1, -1, -1, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, -1, -1, -1, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, -1, -1, -1, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, -1, -1, -1, 1, 0, 0},
    {0, 0, 0, 0, 2, 0, 0, -1, -1, -1, 1, 0},
    {0, 0, 0, 0, 1, 1, 0, 0, -1, -1, -1, 1},
}};

inline constexpr Block gamma_2_1 = {{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {3, 3, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0},
    {6, 6, 4, 2, 1, 1, 0, 0, 0, 0, 0, 0},
    {10, 10, 6, 4, 2, 1, 1, 0, 0, 0, 0, 0},
    {19, 19, 12, 7, 4, 2, 1, 1, 0, 0, 0, 0},
    {33, 33, 21, 12, 7, 4, 2, 1, 1, 0, 0, 0},
    {60, 60, 38, 22, 13, 7, 4, 2, 1, 1, 0, 0},
    {106, 106, 67, 39, 22, 13, 7, 4, 2, 1, 1, 0},
    {190, 190, 120, 70, 40, 23, 13, 7, 4, 2, 1, 1},
}};

inline gapcomp::Triangle to_triangle(const Block& block)
{
    gapcomp::Triangle t(12);
    for (int i = 1; i <= 12; ++i)
        for (int j = 1; j <= i; ++j)
            t.set(i, j, block[i - 1][j - 1]);
    return t;
}

} // namespace golden

#endif // GAPCOMP_TESTS_GOLDEN_HPP
