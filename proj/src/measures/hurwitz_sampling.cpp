#include "cfevt/measures/hurwitz_sampling.hpp"

#include <algorithm>
#include <cmath>

#include "cfevt/cf/exact_engines.hpp"
#include "cfevt/errors.hpp"
#include "cfevt/numerics/source.hpp"
#include "cfevt/parallel.hpp"

namespace cfevt {
namespace {

// Redraws use substreams whose index has this bit set plus the attempt number
// above it, so they never collide with first draws.
constexpr std::uint64_t kRedrawBit = std::uint64_t{1} << 63;

RandomStream attempt_stream(const StationaryConfig& cfg, std::uint64_t index, std::uint64_t attempt) {
  if (attempt == 0) return {cfg.seed, index};
  return {cfg.seed, kRedrawBit | (attempt << 40) | index};
}

}  // namespace

StationarySample stationary_sample_at(const StationaryConfig& cfg, std::uint64_t index) {
  if (cfg.bits < kMinSampleBits) throw InvalidArgument("stationary sampling needs bits >= 53");
  for (std::uint64_t attempt = 0;; ++attempt) {
    const auto start = ComplexSource::uniform_box(attempt_stream(cfg, index, attempt)).at(cfg.bits);
    HurwitzEngine engine(start);
    GaussianInt digit;
    std::size_t k = 0;
    while (k < cfg.burn_in && engine.step(digit)) ++k;
    if (k < cfg.burn_in || engine.terminated()) continue;
    return {index, engine.approx(), engine.peek_digit()};
  }
}

void for_each_stationary_chunk(const StationaryConfig& cfg,
                               const std::function<void(std::span<const StationarySample>)>& sink) {
  const std::size_t chunk = std::max<std::size_t>(cfg.chunk, 1);
  std::vector<StationarySample> buf;
  for (std::size_t lo = 0; lo < cfg.count; lo += chunk) {
    const std::size_t hi = std::min(cfg.count, lo + chunk);
    buf.assign(hi - lo, {});
    parallel_for(lo, hi, cfg.workers, [&](std::size_t i) { buf[i - lo] = stationary_sample_at(cfg, i); });
    sink(buf);
  }
}

std::vector<StationarySample> stationary_sample_hccf(const StationaryConfig& cfg) {
  std::vector<StationarySample> out;
  out.reserve(cfg.count);
  for_each_stationary_chunk(cfg, [&](std::span<const StationarySample> s) {
    out.insert(out.end(), s.begin(), s.end());
  });
  return out;
}

std::vector<std::complex<double>> single_orbit_hccf(std::uint64_t seed, std::size_t count,
                                                    std::size_t skip) {
  std::vector<std::complex<double>> out;
  out.reserve(count);
  auto fresh = [&](std::uint64_t restart) {
    const auto z = ComplexSource::uniform_box({seed, restart}).at(64);
    return std::complex<double>(z.re.get_d(), z.im.get_d());
  };
  std::uint64_t restarts = 0;
  std::complex<double> z = fresh(restarts++);
  for (std::size_t k = 0; out.size() < count; ++k) {
    if (z == 0.0) {
      z = fresh(restarts++);
      continue;
    }
    const std::complex<double> w = 1.0 / z;
    // ties round down, as in the exact map
    z = w - std::complex<double>(std::ceil(w.real() - 0.5), std::ceil(w.imag() - 0.5));
    if (k >= skip) out.push_back(z);
  }
  return out;
}

}  // namespace cfevt
