#pragma once

// Convergence-rate probes for the extreme value laws.

#include <cstddef>
#include <vector>

#include "cfevt/evt/experiments.hpp"

namespace cfevt {

/// Unique positive root of l = n theta^l, by bisection to |residual| < 1e-9.
/// Requires n >= 2 and 0 < theta < 1.
double l_solver(double n, double theta = 0.75);

struct RateRow {
  std::size_t n = 0;
  double empirical = 0;
  double limit = 0;
  double deviation = 0;  // |empirical - limit|
  double l_n = 0;
  double envelope = 0;   // l_n / (n min(r, r^2))
};

/// One row per recorded length of the batch.
std::vector<RateRow> rate_curve(const DigitBatch& batch, const ScalingFamily& scaling, double r,
                                double theta = 0.75);

/// True when at least half of the pairs i < j have d_j <= d_i.
bool majority_nonincreasing(const std::vector<double>& d);

}  // namespace cfevt
