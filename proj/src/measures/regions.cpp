#include "cfevt/measures/regions.hpp"

#include <cmath>

#include <gmpxx.h>

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

// Circle centres: the axis circles +1, +i, -1, -i, then the corners
// 1+i, -1+i, -1-i, 1-i.
constexpr std::array<std::array<int, 2>, 8> kCentres = {{
    {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1},
}};

// d[k] = |z - c_k|^2 - 1, negative inside circle k.
RegionTag classify_from(const std::array<double, 8>& d) {
  for (double v : d) {
    if (std::abs(v) <= kArcTolerance) return RegionTag::boundary();
  }
  for (int k = 4; k < 8; ++k) {
    if (d[k] < 0) return {9 + (k - 4)};
  }
  const bool px = d[0] < 0, py = d[1] < 0, nx = d[2] < 0, ny = d[3] < 0;
  const int inside = px + py + nx + ny;
  if (inside == 2) {
    if (px && py) return {1};
    if (nx && py) return {2};
    if (nx && ny) return {3};
    if (px && ny) return {4};
  }
  if (inside == 1) {
    if (px) return {5};
    if (py) return {6};
    if (nx) return {7};
    return {8};
  }
  // Not reached for points of B off the arcs.
  return RegionTag::boundary();
}

}  // namespace

std::string to_string(RegionTag t) {
  return t.is_boundary() ? "boundary" : "A" + std::to_string(t.index);
}

RegionTag region_classify(std::complex<double> z) {
  const double x = z.real(), y = z.imag();
  if (!(x >= -0.5 && x < 0.5 && y >= -0.5 && y < 0.5)) throw OutsideDomain("point is not in B");
  std::array<double, 8> d{};
  for (std::size_t k = 0; k < 8; ++k) {
    const double dx = x - kCentres[k][0], dy = y - kCentres[k][1];
    d[k] = dx * dx + dy * dy - 1.0;
  }
  return classify_from(d);
}

RegionTag region_classify(const AdaptiveComplex& z) {
  const mpq_class x = z.re.to_rational(), y = z.im.to_rational();
  const mpq_class half(1, 2);
  if (!(x >= -half && x < half && y >= -half && y < half)) throw OutsideDomain("point is not in B");
  std::array<double, 8> d{};
  for (std::size_t k = 0; k < 8; ++k) {
    const mpq_class dx = x - kCentres[k][0], dy = y - kCentres[k][1];
    const mpq_class v = dx * dx + dy * dy - 1;
    d[k] = v.get_d();
  }
  return classify_from(d);
}

RegionCounts region_counts(std::span<const std::complex<double>> points) {
  RegionCounts c{};
  for (const auto& z : points) ++c[static_cast<std::size_t>(region_classify(z).index)];
  return c;
}

}  // namespace cfevt
