#include "cfevt/measures/exact_measures.hpp"

#include <algorithm>
#include <cmath>

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

const double kLog2 = std::log(2.0);
const double kLogGolden = std::log(kGolden);

}  // namespace

double gauss_density(double x) {
  if (!(x > 0 && x < 1)) throw OutsideDomain("gauss_density needs 0 < x < 1");
  return 1.0 / (kLog2 * (1.0 + x));
}

double gauss_digit_tail(double j) {
  if (!(j >= 0)) throw InvalidArgument("digit threshold must be >= 0");
  return std::log1p(1.0 / (std::floor(j) + 1.0)) / kLog2;
}

double nicf_density(double x) {
  if (!(x >= -0.5 && x < 0.5)) throw OutsideDomain("nicf_density needs -1/2 <= x < 1/2");
  return 1.0 / (kLogGolden * (x >= 0 ? kGolden + x : kGolden + 1.0 + x));
}

double nicf_digit_tail(double j) {
  if (!(j >= 0)) throw InvalidArgument("digit threshold must be >= 0");
  // Every b_1 is at least 2, so thresholds below 2 leave the whole interval.
  const double t = std::min(0.5, 1.0 / (std::floor(j) + 0.5));
  return (std::log1p(t / kGolden) - std::log1p(-t / (kGolden + 1.0))) / kLogGolden;
}

TailCurve exact_tail_curve(Family family, const std::vector<double>& j) {
  if (family == Family::hccf) throw InvalidArgument("HCCF has no closed-form tail");
  if (!std::is_sorted(j.begin(), j.end())) throw InvalidArgument("thresholds must be increasing");
  TailCurve c{family, j, {}};
  c.tail.reserve(j.size());
  for (double v : j) c.tail.push_back(family == Family::rcf ? gauss_digit_tail(v) : nicf_digit_tail(v));
  return c;
}

}  // namespace cfevt
