#pragma once

// The dissection of B by the circles |z +- 1| = 1, |z +- i| = 1 and
// |z +- 1 +- i| = 1 into 12 regions.
//
// Labels: A1..A4 lie inside two of the axis circles (first to fourth
// quadrant), A5..A8 inside exactly one (slivers along +x, +y, -x, -y),
// A9..A12 inside a corner circle (counterclockwise from the one centred at
// 1 + i). Points within 2^-50 of an arc are Boundary.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>

#include "cfevt/numerics/adaptive.hpp"

namespace cfevt {

struct RegionTag {
  int index = 0;  // 1..12, or 0 for Boundary

  static constexpr RegionTag boundary() { return {0}; }
  bool is_boundary() const { return index == 0; }
  bool is_bulk() const { return index >= 1 && index <= 4; }
  bool is_sliver() const { return index >= 5 && index <= 8; }
  bool is_corner() const { return index >= 9; }
  friend bool operator==(RegionTag, RegionTag) = default;
};

std::string to_string(RegionTag t);

inline constexpr double kArcTolerance = 0x1p-50;

/// Throws OutsideDomain when z is not in B.
RegionTag region_classify(std::complex<double> z);
RegionTag region_classify(const AdaptiveComplex& z);

/// Counts per tag; slot 0 holds Boundary.
using RegionCounts = std::array<std::uint64_t, 13>;
RegionCounts region_counts(std::span<const std::complex<double>> points);

}  // namespace cfevt
