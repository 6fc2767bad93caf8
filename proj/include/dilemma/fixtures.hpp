#pragma once

#include <array>

namespace dilemma::fixtures {

// Table 1 of the numerical study only says "d ~ 2"; d = 2 exactly gives
// beta(4) = 0.200 instead of the printed 0.166. Solving the n = 3 row
// (k* = n = 3, beta = 3 / (2d - 1) = 0.930) for d gives
//   d0 = (3 / 0.930 + 1) / 2 = 2.11290322580645...
// and with it every printed row reproduces to the table's three decimals.
inline constexpr double kTable1PrintedBeta3 = 0.930;
inline constexpr double kTable1D0 = (3.0 / kTable1PrintedBeta3 + 1.0) / 2.0;

inline constexpr std::array<int, 20> kTable1N = {3,  4,  5,  6,  7,  8,  9,  10, 11, 12,
                                                 13, 14, 15, 20, 25, 30, 35, 40, 45, 50};

// Payoff figure parameters.
inline constexpr int kFig1N = 25;
inline constexpr double kFig1C = 4.2827;
inline constexpr double kFig1D = 2.2827;

}  // namespace dilemma::fixtures
