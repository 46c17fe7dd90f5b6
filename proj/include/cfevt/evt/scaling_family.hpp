#pragma once

// Threshold scalings u_n(r) and limiting exceedance rates tau(r).

#include <cstddef>
#include <optional>

#include "cfevt/cf/expansion.hpp"

namespace cfevt {

struct ScalingFamily {
  Family family = Family::rcf;
  double C = 0;  // HCCF only

  /// RCF n r/log 2, NICF n r/log G, HCCF C r sqrt(n).
  double u(std::size_t n, double r) const;
  /// 1/r for RCF and NICF, 1/r^2 for HCCF.
  double tau(double r) const;
};

/// Throws MissingConstants for HCCF without C and InvalidArgument for C <= 0.
ScalingFamily make_scaling(Family family, std::optional<double> C = std::nullopt);

}  // namespace cfevt
