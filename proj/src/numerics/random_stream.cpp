#include "cfevt/numerics/random_stream.hpp"

#include <string>
#include <vector>

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

void require_bits(std::size_t bits) {
  if (bits < kMinSampleBits) {
    throw InvalidArgument("sampling needs at least 53 bits, got " + std::to_string(bits));
  }
}

mpq_class centred(const mpq_class& unit) { return unit - mpq_class(1, 2); }

}  // namespace

LaneEngine RandomStream::lane(std::uint32_t lane_id) const {
  std::uint64_t h = LaneEngine::mix(seed + LaneEngine::kGamma);
  h = LaneEngine::mix(h ^ (index + 2 * LaneEngine::kGamma));
  h = LaneEngine::mix(h ^ (lane_id + 3 * LaneEngine::kGamma));
  return LaneEngine(h);
}

mpz_class draw_bits(LaneEngine& engine, std::size_t bits) {
  mpz_class m;
  if (bits == 0) return m;
  std::vector<std::uint64_t> words((bits + 63) / 64);
  for (auto& w : words) w = engine();
  // Most significant word first; drop the unused low bits of the last word.
  mpz_import(m.get_mpz_t(), words.size(), 1, sizeof(std::uint64_t), 0, 0, words.data());
  mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), words.size() * 64 - bits);
  return m;
}

mpq_class draw_unit_rational(LaneEngine& engine, std::size_t bits) {
  mpz_class num = draw_bits(engine, bits);
  num = 2 * num + 1;
  mpz_class den;
  mpz_setbit(den.get_mpz_t(), bits + 1);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class sample_uniform_unit_rational(const RandomStream& stream, std::size_t bits) {
  require_bits(bits);
  auto engine = stream.lane(kUnitLane);
  return draw_unit_rational(engine, bits);
}

AdaptiveReal sample_uniform_unit(const RandomStream& stream, std::size_t bits) {
  return AdaptiveReal::from_rational(sample_uniform_unit_rational(stream, bits), bits + 1);
}

AdaptiveComplex sample_uniform_box(const RandomStream& stream, std::size_t bits) {
  require_bits(bits);
  auto re_engine = stream.lane(kBoxReLane);
  auto im_engine = stream.lane(kBoxImLane);
  const mpq_class re = centred(draw_unit_rational(re_engine, bits));
  const mpq_class im = centred(draw_unit_rational(im_engine, bits));
  return {AdaptiveReal::from_rational(re, bits + 1), AdaptiveReal::from_rational(im, bits + 1)};
}

}  // namespace cfevt
