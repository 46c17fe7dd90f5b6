#pragma once

// The naive complex continued fraction on S = {0 < x, y <= 1}, which applies
// the floor function in both coordinates, and the region it traps: bounded
// by |z - 1/2| = 1/2, |z - 1/2 - i| = 1/2 and the segment from 1 to 1 + i.
// Every point of that region is sent back into it with digit -i.

#include <cstddef>
#include <vector>

#include "cfevt/cf/gaussian.hpp"
#include "cfevt/numerics/random_stream.hpp"
#include "cfevt/numerics/source.hpp"

namespace cfevt {

/// Open trap region: 1/2 < x < 1, |z - 1/2| > 1/2, |z - 1/2 - i| > 1/2.
bool in_trap_region(const ComplexRational& z);

struct NaiveStep {
  ComplexRational next;
  GaussianInt digit;  // floor(1/z) taken per coordinate
};

/// z -> 1/z - floor(1/z). Throws ExactZero for z == 0.
NaiveStep naive_floor_map(const ComplexRational& z);

struct NaiveTrapReport {
  std::size_t iterations = 0;
  std::vector<GaussianInt> digits;
  bool all_minus_i = false;
  bool stayed_in_region = false;
};

/// Iterates the naive map exactly. Throws InvalidArgument if z is not in the
/// region and RegionViolation if an iterate leaves it.
NaiveTrapReport naive_complex_trap(const ComplexRational& z, std::size_t iterations);

/// A point drawn uniformly from the trap region by rejection from
/// [1/2, 1] x [0, 1], with `bits`-bit dyadic coordinates.
ComplexRational sample_trap_region(const RandomStream& stream, std::size_t bits = 64);

}  // namespace cfevt
