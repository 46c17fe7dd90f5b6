#include <doctest.h>

#include "cfevt/measures/density.hpp"
#include "cfevt/measures/hurwitz_sampling.hpp"

using namespace cfevt;

// Histograms from burn-in 50 and 100 should agree up to sampling noise.
// At 16x16 and 2e6 samples per arm the noise floor of the L1 distance is
// about 0.013.
TEST_CASE("burn-in has saturated and mu charges every cell") {
  StationaryConfig cfg;
  cfg.seed = 51;
  cfg.count = 2000000;
  DensityGrid g50(16), g100(16), fine(64);
  for_each_stationary_chunk(cfg, [&](std::span<const StationarySample> s) {
    for (const auto& x : s) {
      g50.add(x.z);
      if (x.index < 1000000) fine.add(x.z);
    }
  });
  cfg.seed = 52;
  cfg.burn_in = 100;
  for_each_stationary_chunk(cfg, [&](std::span<const StationarySample> s) {
    for (const auto& x : s) g100.add(x.z);
  });
  const double d = l1_distance(g50, g100);
  MESSAGE("L1(burn-in 50, burn-in 100) = " << d);
  CHECK(d < 0.02);
  CHECK(fine.total() == 1000000);
  CHECK(fine.min_count() > 0);
}
