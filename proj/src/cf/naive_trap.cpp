#include "cfevt/cf/naive_trap.hpp"

#include <string>

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

mpz_class floor_of(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

}  // namespace

bool in_trap_region(const ComplexRational& z) {
  const mpq_class half(1, 2);
  if (!(z.re > half && z.re < 1)) return false;
  const mpq_class n = z.re * z.re + z.im * z.im;
  // |z - 1/2|^2 > 1/4  <=>  |z|^2 > x
  if (!(n > z.re)) return false;
  // |z - 1/2 - i|^2 > 1/4  <=>  |z|^2 > x + 2y - 1
  return n > z.re + 2 * z.im - 1;
}

NaiveStep naive_floor_map(const ComplexRational& z) {
  const mpq_class n = z.re * z.re + z.im * z.im;
  if (n == 0) throw ExactZero("naive map at z = 0");
  const mpq_class inv_re = z.re / n;
  const mpq_class inv_im = -z.im / n;
  const mpz_class fr = floor_of(inv_re);
  const mpz_class fi = floor_of(inv_im);
  return {{inv_re - fr, inv_im - fi}, {to_digit(fr), to_digit(fi)}};
}

NaiveTrapReport naive_complex_trap(const ComplexRational& z, std::size_t iterations) {
  if (!in_trap_region(z)) throw InvalidArgument("start point is not in the trap region");
  NaiveTrapReport rep;
  rep.digits.reserve(iterations);
  ComplexRational cur = z;
  rep.all_minus_i = true;
  for (std::size_t k = 0; k < iterations; ++k) {
    auto step = naive_floor_map(cur);
    rep.digits.push_back(step.digit);
    if (!(step.digit == GaussianInt{0, -1})) rep.all_minus_i = false;
    if (!in_trap_region(step.next)) {
      throw RegionViolation("iterate " + std::to_string(k + 1) + " left the trap region (digit " +
                            to_string(step.digit) + ")");
    }
    cur = std::move(step.next);
    ++rep.iterations;
  }
  rep.stayed_in_region = true;
  return rep;
}

ComplexRational sample_trap_region(const RandomStream& stream, std::size_t bits) {
  auto engine = stream.lane(kTrapLane);
  for (;;) {
    ComplexRational z{mpq_class(1, 2) + draw_unit_rational(engine, bits) / 2,
                      draw_unit_rational(engine, bits)};
    z.re.canonicalize();
    if (in_trap_region(z)) return z;
  }
}

}  // namespace cfevt
