// Frozen reference distance tables for the two special-case ladders,
// cross-checked by hand against the construction. Note d((0,2),(3,2)) = 3 in
// M(5,3): the shortest routes (0,2)-(0,1)-(0,0)-(3,2) and
// (0,2)-(3,0)-(3,1)-(3,2) take three steps each, and the pair counts
// [20, 30, 16] require exactly sixteen distance-3 pairs.
#pragma once

#include <array>
#include <cstdint>

namespace testsupport {

// M(4,3): 9 vertices, vertex (i,j) -> 3i + j.
inline constexpr std::array<std::array<std::uint32_t, 9>, 9> kDistancesM43{{
    {0, 1, 2, 1, 2, 2, 2, 2, 1},
    {1, 0, 1, 2, 1, 2, 2, 1, 2},
    {2, 1, 0, 2, 2, 1, 1, 2, 2},
    {1, 2, 2, 0, 1, 2, 1, 2, 2},
    {2, 1, 2, 1, 0, 1, 2, 1, 2},
    {2, 2, 1, 2, 1, 0, 2, 2, 1},
    {2, 2, 1, 1, 2, 2, 0, 1, 2},
    {2, 1, 2, 2, 1, 2, 1, 0, 1},
    {1, 2, 2, 2, 2, 1, 2, 1, 0},
}};

// M(5,3): 12 vertices, vertex (i,j) -> 3i + j.
inline constexpr std::array<std::array<std::uint32_t, 12>, 12> kDistancesM53{{
    {0, 1, 2, 1, 2, 3, 2, 3, 2, 3, 2, 1},
    {1, 0, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2},
    {2, 1, 0, 3, 2, 1, 2, 3, 2, 1, 2, 3},
    {1, 2, 3, 0, 1, 2, 1, 2, 3, 2, 3, 2},
    {2, 1, 2, 1, 0, 1, 2, 1, 2, 3, 2, 3},
    {3, 2, 1, 2, 1, 0, 3, 2, 1, 2, 3, 2},
    {2, 3, 2, 1, 2, 3, 0, 1, 2, 1, 2, 3},
    {3, 2, 3, 2, 1, 2, 1, 0, 1, 2, 1, 2},
    {2, 3, 2, 3, 2, 1, 2, 1, 0, 3, 2, 1},
    {3, 2, 1, 2, 3, 2, 1, 2, 3, 0, 1, 2},
    {2, 1, 2, 3, 2, 3, 2, 1, 2, 1, 0, 1},
    {1, 2, 3, 2, 3, 2, 3, 2, 1, 2, 1, 0},
}};

}  // namespace testsupport
