#pragma once

// Exact digit engines.
//
// Each engine holds a rational point as a numerator/denominator pair and
// advances it with the Euclidean recurrence equivalent to one application of
// its map. No rounding happens: the digits produced are the digits of the
// stored rational, and the engine reports termination when the orbit hits 0.
// Precision enters only through the rational the caller starts from.

#include <complex>
#include <cstdint>

#include <gmpxx.h>

#include "cfevt/cf/gaussian.hpp"
#include "cfevt/numerics/source.hpp"

namespace cfevt {

/// Gauss map on x = p/q with 0 <= p < q.
class GaussEngine {
 public:
  /// Requires 0 <= x < 1.
  explicit GaussEngine(const mpq_class& x);

  /// Emits the next digit; returns false once the orbit has reached 0.
  bool step(std::int64_t& digit);
  bool terminated() const { return p_ == 0; }
  mpq_class value() const;

 private:
  mpz_class p_, q_, a_, r_;
};

/// Nearest-integer map on x = p/q with -q/2 <= p < q/2.
class NicfEngine {
 public:
  /// Requires -1/2 <= x < 1/2.
  explicit NicfEngine(const mpq_class& x);

  bool step(std::int64_t& b, int& eps);
  bool terminated() const { return p_ == 0; }
  mpq_class value() const;

 private:
  mpz_class p_, q_, a_, r_;
};

/// Hurwitz map on z = w / v with Gaussian-integer numerator and denominator.
///
/// The digit [v/w]_i is read off a double-precision quotient whenever the
/// quotient is small and its parts sit well away from a rounding boundary;
/// otherwise it is computed exactly. Either way the update v - g w is exact.
class HurwitzEngine {
 public:
  /// Requires z in B.
  explicit HurwitzEngine(const ComplexRational& z);

  bool step(GaussianInt& digit);
  bool terminated() const { return w_re_ == 0 && w_im_ == 0; }
  ComplexRational value() const;
  /// Current point rounded to double precision.
  std::complex<double> approx() const;
  /// The digit the next step would emit, without advancing. Requires !terminated().
  GaussianInt peek_digit();
  /// Bit length of the larger denominator part (the point's remaining height).
  std::size_t denominator_bits() const;

 private:
  GaussianInt next_digit();

  mpz_class w_re_, w_im_, v_re_, v_im_;
  mpz_class t0_, t1_, t2_, t3_;
};

}  // namespace cfevt
