#pragma once

// Goodness-of-fit statistics.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cfevt {

struct ChiSquareResult {
  double statistic = 0;
  std::size_t dof = 0;
  double p_value = 0;
  std::vector<std::uint64_t> observed;  // after pooling
  std::vector<double> expected;         // after pooling
};

/// Pearson chi-square of observed counts against cell probabilities summing
/// to 1. Cells with expected count < 5 are pooled into their neighbour toward
/// the last cell (the tail), working inward from the end.
ChiSquareResult chi_square(const std::vector<std::uint64_t>& observed, const std::vector<double>& probs);

/// Observed S_n histogram over 0..j_max-1 plus a pooled ">= j_max" cell,
/// against Poisson(tau).
ChiSquareResult chi_square_poisson(const std::vector<std::uint64_t>& observed, double tau);

/// sup |F_n - F| of a sample against a continuous CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Asymptotic 1% critical value of the one-sample KS statistic.
double ks_critical_1pct(std::size_t n);

}  // namespace cfevt
