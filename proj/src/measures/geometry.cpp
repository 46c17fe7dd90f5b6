#include "cfevt/measures/geometry.hpp"

#include <cmath>
#include <complex>
#include <random>

#include <boost/math/constants/constants.hpp>

#include "cfevt/errors.hpp"
#include "cfevt/measures/regions.hpp"

namespace cfevt {
namespace {

constexpr double kPi = boost::math::constants::pi<double>();
constexpr double kInvSqrt2 = boost::math::constants::one_div_root_two<double>();

// Half of D5(j): the part with y > 0, under the arc y = 1 - sqrt(1 - x^2)
// up to where that arc meets |z| = R, then under |z| = R.
double half_sliver(double j) {
  const double R = 1.0 / j;
  const double a = std::sqrt(R * R - R * R * R * R / 4.0);
  const double under_arc = a - 0.5 * (a * std::sqrt(1.0 - a * a) + std::asin(a));
  const double under_disk =
      kPi * R * R / 4.0 - 0.5 * (a * std::sqrt(R * R - a * a) + R * R * std::asin(a / R));
  return under_arc + under_disk;
}

}  // namespace

DiskGeometry disk_geometry(double j) {
  if (!(j > 2)) throw InvalidArgument("disk_geometry needs j > 2");
  DiskGeometry g;
  g.j = j;
  g.r_in = 1.0 / (j + kInvSqrt2);
  g.r_out = 1.0 / (j - kInvSqrt2);
  g.disk_area = kPi / (j * j);
  g.sliver_height = 1.0 / (2.0 * j * j);
  g.sliver_bound = 1.0 / (j * j * j);
  g.bulk_bounds = {kPi / (4.0 * j * j) - g.sliver_bound, kPi / (4.0 * j * j)};
  return g;
}

mpq_class sliver_height_exact(const mpq_class& j) {
  if (j <= 2) throw InvalidArgument("sliver height needs j > 2");
  // x^2 + (y - 1)^2 = 1 and x^2 + y^2 = 1/j^2 differ by 1 - 2y = 1 - 1/j^2.
  const mpq_class r2 = 1 / (j * j);
  mpq_class y = (1 - (1 - r2)) / 2;
  y.canonicalize();
  return y;
}

double sliver_sector_area(double j) {
  if (!(j >= 3)) throw InvalidArgument("sector areas need j >= 3");
  return 2.0 * half_sliver(j);
}

double bulk_sector_area(double j) {
  if (!(j >= 3)) throw InvalidArgument("sector areas need j >= 3");
  return kPi / (4.0 * j * j) - 2.0 * half_sliver(j);
}

double sector_area_monte_carlo(double j, int region, std::uint64_t samples,
                               const RandomStream& stream) {
  if (!(j > 2)) throw InvalidArgument("sector area needs j > 2");
  if (samples == 0) throw InvalidArgument("need at least one sample");
  const double R = 1.0 / j;
  auto engine = stream.lane(kUnitLane);
  std::uniform_real_distribution<double> u(-R, R);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::complex<double> z(u(engine), u(engine));
    if (std::norm(z) > R * R) continue;
    if (region_classify(z).index == region) ++hits;
  }
  return 4.0 * R * R * static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace cfevt
