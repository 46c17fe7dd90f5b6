#include "cfevt/evt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfevt/errors.hpp"
#include "cfevt/evt/limits.hpp"
#include "cfevt/numerics/source.hpp"
#include "cfevt/parallel.hpp"

namespace cfevt {
namespace {

std::vector<double> sample_moduli(const BatchConfig& cfg, std::uint64_t index) {
  const RandomStream stream{cfg.seed, index};
  const std::size_t n = cfg.n;
  switch (cfg.family) {
    case Family::rcf: {
      auto e = refine_and_agree_rcf(RealSource::uniform(stream), n, cfg.p0);
      return digit_moduli(e);
    }
    case Family::nicf: {
      auto e = refine_and_agree_nicf(RealSource::uniform(stream).offset(mpq_class(-1, 2)), n, cfg.p0);
      return digit_moduli(e);
    }
    case Family::hccf: {
      auto e = refine_and_agree_hccf(ComplexSource::uniform_box(stream), n, cfg.p0);
      return digit_moduli(e);
    }
  }
  return {};
}

}  // namespace

std::span<const MaximaSample> DigitBatch::at(std::size_t n) const {
  const auto it = std::find(lengths.begin(), lengths.end(), n);
  if (it == lengths.end()) throw InvalidArgument("length " + std::to_string(n) + " was not recorded");
  return top[static_cast<std::size_t>(it - lengths.begin())];
}

DigitBatch generate_batch(const BatchConfig& cfg) {
  if (cfg.n == 0) throw InvalidArgument("n must be >= 1");
  if (cfg.keep == 0 || cfg.keep > cfg.n) throw InvalidArgument("keep must be in 1..n");
  DigitBatch b;
  b.family = cfg.family;
  b.seed = cfg.seed;
  b.lengths = cfg.checkpoints;
  b.lengths.push_back(cfg.n);
  std::sort(b.lengths.begin(), b.lengths.end());
  b.lengths.erase(std::unique(b.lengths.begin(), b.lengths.end()), b.lengths.end());
  if (b.lengths.front() < cfg.keep || b.lengths.back() != cfg.n) {
    throw InvalidArgument("checkpoints must lie in keep..n");
  }
  b.top.assign(b.lengths.size(), std::vector<MaximaSample>(cfg.samples));
  parallel_for(0, cfg.samples, cfg.workers, [&](std::size_t i) {
    const auto moduli = sample_moduli(cfg, i);
    // A start whose orbit terminates early has measure zero; treat the
    // missing digits as absent (they cannot exceed any threshold).
    TopK t(cfg.keep);
    std::size_t next = 0;
    for (std::size_t pos = 0; pos < cfg.n && next < b.lengths.size(); ++pos) {
      if (pos < moduli.size()) t.push(moduli[pos]);
      else t.push(0.0);
      if (pos + 1 == b.lengths[next]) b.top[next++][i] = t.sample();
    }
  });
  return b;
}

EvlReport run_evl_experiment(std::span<const MaximaSample> maxima, std::size_t n,
                             const ScalingFamily& scaling, const std::vector<double>& r_grid,
                             std::size_t k) {
  if (maxima.empty()) throw InvalidArgument("no samples");
  if (k == 0 || k > maxima.front().top.size()) throw InvalidArgument("k exceeds the kept order statistics");
  EvlReport rep;
  rep.family = scaling.family;
  rep.n = n;
  rep.samples = maxima.size();
  rep.k = k;
  const double N = static_cast<double>(maxima.size());
  for (double r : r_grid) {
    EvlRow row;
    row.r = r;
    row.u = scaling.u(n, r);
    std::size_t below = 0;
    for (const auto& m : maxima) below += m.kth(k) <= row.u;
    row.empirical = static_cast<double>(below) / N;
    row.limit = frechet_limit(scaling, r, k);
    row.se = std::sqrt(row.empirical * (1 - row.empirical) / N);
    row.deviation = row.empirical - row.limit;
    rep.ks = std::max(rep.ks, std::abs(row.deviation));
    rep.rows.push_back(row);
  }
  return rep;
}

EvlReport run_evl_experiment(Family family, std::size_t n, std::size_t samples,
                             const std::vector<double>& r_grid, std::size_t k, std::uint64_t seed,
                             std::optional<double> C, std::size_t workers) {
  if (samples < 1000) throw InvalidArgument("EVL experiments need at least 1000 samples");
  const ScalingFamily scaling = make_scaling(family, C);
  BatchConfig cfg;
  cfg.family = family;
  cfg.n = n;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.keep = std::min<std::size_t>(std::max<std::size_t>(k, 16), n);
  cfg.workers = workers;
  const auto batch = generate_batch(cfg);
  return run_evl_experiment(batch.at(n), n, scaling, r_grid, k);
}

PoissonReport run_poisson_experiment(std::span<const MaximaSample> maxima, std::size_t n,
                                     const ScalingFamily& scaling, double r, std::size_t j_max,
                                     Family family) {
  if (maxima.empty()) throw InvalidArgument("no samples");
  const std::size_t kept = maxima.front().top.size();
  if (j_max < 3 || j_max >= kept) throw InvalidArgument("j_max must be in 3..kept-1");
  PoissonReport rep;
  rep.family = family;
  rep.n = n;
  rep.samples = maxima.size();
  rep.r = r;
  rep.v = scaling.u(n, r);
  rep.tau = scaling.tau(r);
  rep.j_max = j_max;
  rep.observed.assign(j_max + 1, 0);
  rep.table = {n, rep.v, r, {}};
  std::size_t s0 = 0, mbelow = 0;
  for (const auto& m : maxima) {
    const std::size_t S = count_exceedances(m.top, rep.v);
    rep.table.counts.push_back(S);
    ++rep.observed[std::min(S, j_max)];
    s0 += S == 0;
    mbelow += m.max() <= rep.v;
  }
  const double N = static_cast<double>(maxima.size());
  rep.frac_no_exceedance = static_cast<double>(s0) / N;
  rep.frac_max_below = static_cast<double>(mbelow) / N;
  double head = 0;
  for (std::size_t j = 0; j < j_max; ++j) {
    rep.expected.push_back(N * poisson_pmf(rep.tau, j));
    head += poisson_pmf(rep.tau, j);
  }
  rep.expected.push_back(N * std::max(0.0, 1.0 - head));
  rep.chi = chi_square_poisson(rep.observed, rep.tau);
  return rep;
}

PoissonReport run_poisson_experiment(Family family, std::size_t n, std::size_t samples, double r,
                                     std::size_t j_max, std::uint64_t seed, std::optional<double> C,
                                     std::size_t workers) {
  if (samples < 1000) throw InvalidArgument("Poisson experiments need at least 1000 samples");
  const ScalingFamily scaling = make_scaling(family, C);
  BatchConfig cfg;
  cfg.family = family;
  cfg.n = n;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.keep = std::min<std::size_t>(std::max<std::size_t>(j_max + 1, 16), n);
  cfg.workers = workers;
  const auto batch = generate_batch(cfg);
  return run_poisson_experiment(batch.at(n), n, scaling, r, j_max, family);
}

}  // namespace cfevt
