#include "cfevt/cf/exact_engines.hpp"

#include <algorithm>
#include <cmath>

#include "cfevt/cf/maps.hpp"
#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

// Quotients at most 2^40 in modulus are decided in double precision.
constexpr long kFastPathBits = 40;
// Relative distance to a rounding boundary below which the exact path is used.
// The double quotient is accurate to ~2^-48 relative, so this is a wide margin.
constexpr double kBoundaryMargin = 1e-12;

// A value scaled by 2^-shift, as a double.
double scaled(const mpz_class& z, long shift) {
  long e = 0;
  const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::ldexp(d, static_cast<int>(e - shift));
}

long bit_length(const mpz_class& z) {
  return z == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

// Nearest integer with ties down, if `t` is safely away from a tie.
bool safe_round(double t, double tol, std::int64_t& out) {
  const double f = std::floor(t);
  const double frac = t - f;
  if (std::abs(frac - 0.5) <= tol) return false;
  out = static_cast<std::int64_t>(frac > 0.5 ? f + 1.0 : f);
  return true;
}

}  // namespace

GaussEngine::GaussEngine(const mpq_class& x) : p_(x.get_num()), q_(x.get_den()) {
  if (x < 0 || x >= 1) throw OutsideDomain("Gauss engine needs 0 <= x < 1, got " + x.get_str());
}

bool GaussEngine::step(std::int64_t& digit) {
  if (p_ == 0) return false;
  mpz_tdiv_qr(a_.get_mpz_t(), r_.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
  digit = to_digit(a_);
  mpz_swap(q_.get_mpz_t(), p_.get_mpz_t());
  mpz_swap(p_.get_mpz_t(), r_.get_mpz_t());
  return true;
}

mpq_class GaussEngine::value() const {
  mpq_class v(p_, q_);
  v.canonicalize();
  return v;
}

NicfEngine::NicfEngine(const mpq_class& x) : p_(x.get_num()), q_(x.get_den()) {
  if (x < mpq_class(-1, 2) || x >= mpq_class(1, 2)) {
    throw OutsideDomain("NICF engine needs -1/2 <= x < 1/2, got " + x.get_str());
  }
}

bool NicfEngine::step(std::int64_t& b, int& eps) {
  if (p_ == 0) return false;
  eps = mpz_sgn(p_.get_mpz_t());
  mpz_abs(p_.get_mpz_t(), p_.get_mpz_t());
  // q = a p + r with 0 <= r < p; round up when r >= p/2.
  mpz_tdiv_qr(a_.get_mpz_t(), r_.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
  mpz_mul_2exp(q_.get_mpz_t(), r_.get_mpz_t(), 1);
  if (mpz_cmp(q_.get_mpz_t(), p_.get_mpz_t()) >= 0) {
    mpz_add_ui(a_.get_mpz_t(), a_.get_mpz_t(), 1);
    mpz_sub(r_.get_mpz_t(), r_.get_mpz_t(), p_.get_mpz_t());
  }
  b = to_digit(a_);
  // next = r / p
  mpz_swap(q_.get_mpz_t(), p_.get_mpz_t());
  mpz_swap(p_.get_mpz_t(), r_.get_mpz_t());
  return true;
}

mpq_class NicfEngine::value() const {
  mpq_class v(p_, q_);
  v.canonicalize();
  return v;
}

HurwitzEngine::HurwitzEngine(const ComplexRational& z) {
  if (!in_box(z)) throw OutsideDomain("Hurwitz engine needs z in B");
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), z.re.get_den().get_mpz_t(), z.im.get_den().get_mpz_t());
  w_re_ = z.re.get_num() * (den / z.re.get_den());
  w_im_ = z.im.get_num() * (den / z.im.get_den());
  v_re_ = den;
  v_im_ = 0;
}

GaussianInt HurwitzEngine::next_digit() {
  const long bw = std::max(bit_length(w_re_), bit_length(w_im_));
  const long bv = std::max(bit_length(v_re_), bit_length(v_im_));
  if (bv - bw <= kFastPathBits) {
    const double wr = scaled(w_re_, bw);
    const double wi = scaled(w_im_, bw);
    const double vr = scaled(v_re_, bw);
    const double vi = scaled(v_im_, bw);
    const double n = wr * wr + wi * wi;
    const double qr = (vr * wr + vi * wi) / n;
    const double qi = (vi * wr - vr * wi) / n;
    const double tol = kBoundaryMargin * (1.0 + std::abs(qr) + std::abs(qi));
    GaussianInt g;
    if (safe_round(qr, tol, g.re) && safe_round(qi, tol, g.im)) return g;
  }
  // Exact: [v/w]_i with v/w = v conj(w) / N(w).
  t0_ = w_re_ * w_re_ + w_im_ * w_im_;
  t1_ = v_re_ * w_re_ + v_im_ * w_im_;
  t2_ = v_im_ * w_re_ - v_re_ * w_im_;
  mpz_mul_2exp(t1_.get_mpz_t(), t1_.get_mpz_t(), 1);
  t1_ -= t0_;
  mpz_mul_2exp(t2_.get_mpz_t(), t2_.get_mpz_t(), 1);
  t2_ -= t0_;
  mpz_mul_2exp(t0_.get_mpz_t(), t0_.get_mpz_t(), 1);
  mpz_cdiv_q(t1_.get_mpz_t(), t1_.get_mpz_t(), t0_.get_mpz_t());
  mpz_cdiv_q(t2_.get_mpz_t(), t2_.get_mpz_t(), t0_.get_mpz_t());
  return {to_digit(t1_), to_digit(t2_)};
}

GaussianInt HurwitzEngine::peek_digit() {
  if (terminated()) throw ExactZero("Hurwitz engine has terminated");
  return next_digit();
}

bool HurwitzEngine::step(GaussianInt& digit) {
  if (terminated()) return false;
  digit = next_digit();
  const long gr = static_cast<long>(digit.re);
  const long gi = static_cast<long>(digit.im);
  // v <- v - g w, then swap so that the new point is (v - g w) / w.
  mpz_mul_si(t0_.get_mpz_t(), w_re_.get_mpz_t(), gr);
  mpz_sub(v_re_.get_mpz_t(), v_re_.get_mpz_t(), t0_.get_mpz_t());
  mpz_mul_si(t0_.get_mpz_t(), w_im_.get_mpz_t(), gi);
  mpz_add(v_re_.get_mpz_t(), v_re_.get_mpz_t(), t0_.get_mpz_t());
  mpz_mul_si(t0_.get_mpz_t(), w_im_.get_mpz_t(), gr);
  mpz_sub(v_im_.get_mpz_t(), v_im_.get_mpz_t(), t0_.get_mpz_t());
  mpz_mul_si(t0_.get_mpz_t(), w_re_.get_mpz_t(), gi);
  mpz_sub(v_im_.get_mpz_t(), v_im_.get_mpz_t(), t0_.get_mpz_t());
  mpz_swap(v_re_.get_mpz_t(), w_re_.get_mpz_t());
  mpz_swap(v_im_.get_mpz_t(), w_im_.get_mpz_t());
  return true;
}

ComplexRational HurwitzEngine::value() const {
  // w / v = w conj(v) / N(v)
  const mpz_class n = v_re_ * v_re_ + v_im_ * v_im_;
  mpq_class re(w_re_ * v_re_ + w_im_ * v_im_, n);
  mpq_class im(w_im_ * v_re_ - w_re_ * v_im_, n);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

std::complex<double> HurwitzEngine::approx() const {
  const long bv = std::max(bit_length(v_re_), bit_length(v_im_));
  const std::complex<double> w(scaled(w_re_, bv), scaled(w_im_, bv));
  const std::complex<double> v(scaled(v_re_, bv), scaled(v_im_, bv));
  return w / v;
}

std::size_t HurwitzEngine::denominator_bits() const {
  return static_cast<std::size_t>(std::max(bit_length(v_re_), bit_length(v_im_)));
}

}  // namespace cfevt
