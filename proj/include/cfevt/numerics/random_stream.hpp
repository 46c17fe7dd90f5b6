#pragma once

// Deterministic, seekable randomness.
//
// A RandomStream names a substream by (seed, index). Each substream splits
// further into numbered lanes. A lane is a SplitMix64 sequence whose starting
// state is a hash of (seed, index, lane), so draws are a pure function of
// (seed, index, lane, draw counter) and independent of thread scheduling.
// Opening a lane costs a few multiplications, which matters when every one
// of millions of samples opens its own.

#include <cstddef>
#include <cstdint>
#include <limits>

#include <gmpxx.h>

#include "cfevt/numerics/adaptive.hpp"

namespace cfevt {

/// Smallest precision accepted by the samplers.
inline constexpr std::size_t kMinSampleBits = 53;

/// SplitMix64 over a hashed starting state.
class LaneEngine {
 public:
  using result_type = std::uint64_t;

  explicit LaneEngine(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return mix(state_ += kGamma); }

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct RandomStream {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  RandomStream with_index(std::uint64_t i) const { return {seed, i}; }
  LaneEngine lane(std::uint32_t lane_id) const;
};

/// Reads the first `bits` bits (most significant first) of an engine's word
/// stream as an unsigned integer. Requesting more bits from a fresh engine of
/// the same lane extends the same binary expansion.
mpz_class draw_bits(LaneEngine& engine, std::size_t bits);

/// The midpoint (2m + 1) / 2^(bits + 1) of the dyadic cell selected by the
/// next `bits` random bits: uniform on (0, 1) up to the cell width, never 0.
mpq_class draw_unit_rational(LaneEngine& engine, std::size_t bits);

/// Lane assignments used by the samplers below.
inline constexpr std::uint32_t kUnitLane = 0;
inline constexpr std::uint32_t kBoxReLane = 1;
inline constexpr std::uint32_t kBoxImLane = 2;
inline constexpr std::uint32_t kTrapLane = 3;

/// Uniform value on (0, 1) carrying `bits` random mantissa bits. The value is
/// exact at precision bits + 1. Throws InvalidArgument for bits < 53.
AdaptiveReal sample_uniform_unit(const RandomStream& stream, std::size_t bits);
mpq_class sample_uniform_unit_rational(const RandomStream& stream, std::size_t bits);

/// Uniform value on B = [-1/2, 1/2)^2 with independent parts.
AdaptiveComplex sample_uniform_box(const RandomStream& stream, std::size_t bits);

}  // namespace cfevt
