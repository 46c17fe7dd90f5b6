#pragma once

// Disk and sector geometry of the first-digit tail of the Hurwitz map.
//
// D(j) is the disk |z| <= 1/j. Inversion sends {|[1/z]_i| > j} between the
// disks of radius r_in = 1/(j + 1/sqrt 2) and r_out = 1/(j - 1/sqrt 2).
// D1(j) and D5(j) are its intersections with the bulk region A1 and the
// sliver A5.

#include <array>
#include <cstdint>

#include <gmpxx.h>

#include "cfevt/numerics/random_stream.hpp"

namespace cfevt {

struct DiskGeometry {
  double j = 0;
  double r_in = 0;
  double r_out = 0;
  double disk_area = 0;              // pi / j^2
  double sliver_height = 0;          // 1 / (2 j^2)
  double sliver_bound = 0;           // 1 / j^3
  std::array<double, 2> bulk_bounds{};  // [pi/(4 j^2) - 1/j^3, pi/(4 j^2)]
};

/// Requires j > 2.
DiskGeometry disk_geometry(double j);

/// Height at which |z| = 1/j meets |z - i| = 1, solved exactly.
mpq_class sliver_height_exact(const mpq_class& j);

/// Exact areas of D5(j) and D1(j) for j >= 3 (closed-form integrals).
double sliver_sector_area(double j);
double bulk_sector_area(double j);

/// Monte Carlo area of the sector of D(j) with the given region index,
/// by classifying uniform points of the square [-1/j, 1/j]^2.
double sector_area_monte_carlo(double j, int region, std::uint64_t samples,
                               const RandomStream& stream);

}  // namespace cfevt
