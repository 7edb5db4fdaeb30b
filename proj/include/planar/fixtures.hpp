#pragma once

#include <array>
#include <cstdint>

// Published reference values. These are literal constants and are never
// derived from the code under test.
namespace planar::fixtures {

struct BaseEntry {
  int r, s, theta;
  std::int64_t value;
};

struct DegreeEntry {
  int d, r, s;
  std::int64_t value;
};

/// Nodal count and reducible-nodal count with delta = (d-1)(d-2)/2 nodes.
struct NodalEntry {
  int d, r, s, delta;
  std::int64_t nodal;
  std::int64_t reducible;
};

/// Planar lines; every unlisted (r, s, theta) is 0.
inline constexpr std::array<BaseEntry, 10> kLineTable{{
    {1, 2, 0, 0},
    {3, 1, 0, 0},
    {5, 0, 0, 0},
    {0, 2, 1, 1},
    {2, 1, 1, 1},
    {4, 0, 1, 2},
    {1, 1, 2, 1},
    {3, 0, 2, 2},
    {0, 1, 3, 0},
    {2, 0, 3, 1},
}};

/// Planar conics; every unlisted (r, s, theta) is 0.
inline constexpr std::array<BaseEntry, 15> kConicTable{{
    {8, 0, 0, 92},
    {6, 1, 0, 18},
    {4, 2, 0, 4},
    {2, 3, 0, 1},
    {7, 0, 1, 34},
    {5, 1, 1, 6},
    {3, 2, 1, 1},
    {1, 3, 1, 0},
    {6, 0, 2, 8},
    {4, 1, 2, 1},
    {2, 2, 2, 0},
    {0, 3, 2, 0},
    {5, 0, 3, 1},
    {3, 1, 3, 0},
    {1, 2, 3, 0},
}};

/// Planar curves through lines only, theta = 0.
inline constexpr std::array<DegreeEntry, 4> kLineOnlyCounts{{
    {3, 11, 0, 12960},
    {4, 14, 0, 3727920},
    {5, 17, 0, 1979329280},
    {6, 20, 0, 1763519463360},
}};

inline constexpr std::array<NodalEntry, 4> kNodalCounts{{
    {3, 11, 0, 1, 12960, 0},
    {4, 14, 0, 3, 4057340, 329420},
    {5, 17, 0, 6, 2487128120, 507798840},
    {6, 20, 0, 10, 2681467886460, 917948423100},
}};

}  // namespace planar::fixtures
