#pragma once

// n mu{first digit modulus > u_n(r)} against its limit tau(r).

#include <cstddef>
#include <optional>
#include <vector>

#include "cfevt/cf/expansion.hpp"
#include "cfevt/measures/cusp.hpp"

namespace cfevt {

struct ScalingRow {
  std::size_t n = 0;
  double u = 0;
  double n_tail = 0;
  double tau = 0;
  double deviation = 0;  // n_tail - tau
};

/// Exact tails for RCF and NICF. HCCF needs both the constants (for u_n) and
/// an empirical tail; MissingConstants otherwise.
std::vector<ScalingRow> scaling_check(Family family, double r, const std::vector<std::size_t>& n_grid,
                                      const CuspConstants* constants = nullptr,
                                      const EmpiricalTail* tail = nullptr);

}  // namespace cfevt
