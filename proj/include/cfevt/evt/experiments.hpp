#pragma once

// Monte Carlo extreme-value experiments over certified expansions of
// Lebesgue-uniform starting points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cfevt/cf/expansion.hpp"
#include "cfevt/evt/gof.hpp"
#include "cfevt/evt/order_stats.hpp"
#include "cfevt/evt/scaling_family.hpp"

namespace cfevt {

struct BatchConfig {
  Family family = Family::nicf;
  std::size_t n = 0;
  /// Extra prefix lengths at which order statistics are also recorded.
  std::vector<std::size_t> checkpoints;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t keep = 16;  // order statistics kept per sample
  std::size_t workers = 0;
  std::optional<std::size_t> p0;  // initial precision; default_initial_bits(n) if unset
};

/// Order statistics of sample i's digit moduli at each recorded length.
struct DigitBatch {
  Family family = Family::nicf;
  std::uint64_t seed = 0;
  std::vector<std::size_t> lengths;              // increasing, last = n
  std::vector<std::vector<MaximaSample>> top;    // [length][sample]
  std::size_t samples() const { return top.empty() ? 0 : top.front().size(); }
  /// Throws InvalidArgument when n was not recorded.
  std::span<const MaximaSample> at(std::size_t n) const;
};

/// Sample i expands the uniform start drawn from substream (seed, i): (0, 1)
/// for RCF, [-1/2, 1/2) for NICF, B for HCCF. Every expansion goes through
/// refine_and_agree. Results do not depend on the worker count.
DigitBatch generate_batch(const BatchConfig& cfg);

struct EvlRow {
  double r = 0;
  double u = 0;
  double empirical = 0;  // fraction with M^(k) <= u
  double limit = 0;
  double se = 0;         // binomial standard error of `empirical`
  double deviation = 0;  // empirical - limit
};

struct EvlReport {
  Family family = Family::nicf;
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t k = 1;
  std::vector<EvlRow> rows;
  double ks = 0;  // max |deviation| over the r grid
};

EvlReport run_evl_experiment(std::span<const MaximaSample> maxima, std::size_t n,
                             const ScalingFamily& scaling, const std::vector<double>& r_grid,
                             std::size_t k);
/// Generates the batch first. Requires samples >= 1000.
EvlReport run_evl_experiment(Family family, std::size_t n, std::size_t samples,
                             const std::vector<double>& r_grid, std::size_t k, std::uint64_t seed,
                             std::optional<double> C = std::nullopt, std::size_t workers = 0);

struct PoissonReport {
  Family family = Family::nicf;
  std::size_t n = 0;
  std::size_t samples = 0;
  double r = 0;
  double v = 0;  // u_n(r)
  double tau = 0;
  std::size_t j_max = 0;
  std::vector<std::uint64_t> observed;  // S_n = 0..j_max-1, then S_n >= j_max
  std::vector<double> expected;         // Poisson(tau) counts, same cells
  ChiSquareResult chi;
  ExceedanceTable table;                // S_n per sample, capped at the kept count
  double frac_no_exceedance = 0;        // S_n = 0
  double frac_max_below = 0;            // M_n <= v
};

/// Requires 3 <= j_max < kept order statistics.
PoissonReport run_poisson_experiment(std::span<const MaximaSample> maxima, std::size_t n,
                                     const ScalingFamily& scaling, double r, std::size_t j_max,
                                     Family family);
PoissonReport run_poisson_experiment(Family family, std::size_t n, std::size_t samples, double r,
                                     std::size_t j_max, std::uint64_t seed,
                                     std::optional<double> C = std::nullopt, std::size_t workers = 0);

}  // namespace cfevt
