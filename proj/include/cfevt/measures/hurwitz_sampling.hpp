#pragma once

// Approximate samples from the invariant measure mu of the Hurwitz map:
// Lebesgue-uniform starts pushed forward burn_in times.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cfevt/cf/gaussian.hpp"

namespace cfevt {

struct StationaryConfig {
  std::uint64_t seed = 1;
  std::size_t count = 0;
  std::size_t burn_in = 50;
  std::size_t bits = 256;   // precision of the uniform start
  std::size_t workers = 0;  // 0: hardware concurrency
  std::size_t chunk = std::size_t{1} << 16;
};

struct StationarySample {
  std::uint64_t index = 0;
  std::complex<double> z;  // the pushed-forward point
  GaussianInt a1;          // its next digit [1/z]_i
};

/// Sample `index` of a run: draws z uniform on B from substream (seed, index),
/// applies the Hurwitz map burn_in times and returns the iterate. Starts whose
/// orbit reaches 0 first are replaced by a fresh draw.
StationarySample stationary_sample_at(const StationaryConfig& cfg, std::uint64_t index);

/// Streams all samples to `sink` in index order, one chunk at a time.
void for_each_stationary_chunk(const StationaryConfig& cfg,
                               const std::function<void(std::span<const StationarySample>)>& sink);

std::vector<StationarySample> stationary_sample_hccf(const StationaryConfig& cfg);

/// Diagnostic only: one long orbit of the Hurwitz map in double precision,
/// skipping the first `skip` points. Rounding errors make this a pseudo-orbit,
/// so it is a cross-check on the push-forward sampler, not a replacement.
std::vector<std::complex<double>> single_orbit_hccf(std::uint64_t seed, std::size_t count,
                                                    std::size_t skip = 1000);

}  // namespace cfevt
