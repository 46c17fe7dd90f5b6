#pragma once

// Limit laws: k-th maxima and Poisson exceedance counts.

#include <cstddef>

#include "cfevt/evt/scaling_family.hpp"

namespace cfevt {

/// e^{-tau} sum_{j<k} tau^j / j!
double frechet_limit_tau(double tau, std::size_t k);
/// frechet_limit_tau(f.tau(r), k). Requires r > 0 and k >= 1.
double frechet_limit(const ScalingFamily& f, double r, std::size_t k);
double frechet_limit(Family family, double r, std::size_t k);

/// e^{-tau} tau^j / j!, evaluated in log space.
double poisson_pmf(double tau, std::size_t j);

}  // namespace cfevt
