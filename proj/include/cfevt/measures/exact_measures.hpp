#pragma once

// Invariant densities of the Gauss and nearest-integer maps and the exact
// laws of their first digit.

#include <vector>

#include "cfevt/cf/expansion.hpp"

namespace cfevt {

/// (sqrt(5) + 1) / 2
inline constexpr double kGolden = 1.6180339887498948482;

/// 1 / (log 2 (1 + x)) on (0, 1).
double gauss_density(double x);
/// mu_G{a_1 > j} = log(1 + 1/(floor(j) + 1)) / log 2 for real j >= 0.
double gauss_digit_tail(double j);

/// 1/(log G (G + x)) on [0, 1/2) and 1/(log G (G + 1 + x)) on [-1/2, 0).
double nicf_density(double x);
/// mu_N{b_1 > j} = mu_N{|x| <= 1/(floor(j) + 1/2)} for real j >= 0.
double nicf_digit_tail(double j);

/// Digit tail curve over increasing thresholds.
struct TailCurve {
  Family family = Family::rcf;
  std::vector<double> j;
  std::vector<double> tail;
};

/// Exact tail curve for RCF or NICF (InvalidArgument for HCCF).
TailCurve exact_tail_curve(Family family, const std::vector<double>& j);

}  // namespace cfevt
