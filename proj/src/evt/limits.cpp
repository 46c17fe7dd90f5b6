#include "cfevt/evt/limits.hpp"

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

const double kLog2 = std::log(2.0);
const double kLogGolden = std::log(boost::math::constants::phi<double>());

}  // namespace

double ScalingFamily::u(std::size_t n, double r) const {
  const double nn = static_cast<double>(n);
  switch (family) {
    case Family::rcf: return nn * r / kLog2;
    case Family::nicf: return nn * r / kLogGolden;
    case Family::hccf: return C * r * std::sqrt(nn);
  }
  return 0;
}

double ScalingFamily::tau(double r) const {
  return family == Family::hccf ? 1.0 / (r * r) : 1.0 / r;
}

ScalingFamily make_scaling(Family family, std::optional<double> C) {
  if (family != Family::hccf) return {family, 0.0};
  if (!C) throw MissingConstants("HCCF scaling needs the constant C");
  if (!(*C > 0)) throw InvalidArgument("C must be positive");
  return {family, *C};
}

double poisson_pmf(double tau, std::size_t j) {
  if (!(tau >= 0)) throw InvalidArgument("tau must be >= 0");
  if (tau == 0) return j == 0 ? 1.0 : 0.0;
  const double jj = static_cast<double>(j);
  return std::exp(-tau + jj * std::log(tau) - std::lgamma(jj + 1.0));
}

double frechet_limit_tau(double tau, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be >= 1");
  double s = 0;
  for (std::size_t j = 0; j < k; ++j) s += poisson_pmf(tau, j);
  return s;
}

double frechet_limit(const ScalingFamily& f, double r, std::size_t k) {
  if (!(r > 0)) throw InvalidArgument("r must be positive");
  return frechet_limit_tau(f.tau(r), k);
}

double frechet_limit(Family family, double r, std::size_t k) {
  // tau does not depend on C.
  return frechet_limit(ScalingFamily{family, 1.0}, r, k);
}

}  // namespace cfevt
