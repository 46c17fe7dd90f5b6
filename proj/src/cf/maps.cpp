#include "cfevt/cf/maps.hpp"

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

const mpq_class kHalf(1, 2);

bool in_half_open(const mpq_class& t) { return t >= -kHalf && t < kHalf; }
bool in_half_open(const AdaptiveReal& t) { return t >= -0.5 && t < 0.5; }

}  // namespace

bool in_box(const AdaptiveComplex& z) { return in_half_open(z.re) && in_half_open(z.im); }
bool in_box(const ComplexRational& z) { return in_half_open(z.re) && in_half_open(z.im); }

GaussStep<AdaptiveReal> gauss_map(const AdaptiveReal& x) {
  if (x.is_zero()) throw ExactZero("Gauss map at 0");
  if (!(x > 0.0 && x < 1.0)) throw OutsideDomain("Gauss map needs 0 < x < 1, got " + x.to_decimal());
  const AdaptiveReal inv = x.reciprocal();
  const mpz_class a = inv.floor();
  return {inv - a, to_digit(a)};
}

GaussStep<mpq_class> gauss_map(const mpq_class& x) {
  if (x == 0) throw ExactZero("Gauss map at 0");
  if (!(x > 0 && x < 1)) throw OutsideDomain("Gauss map needs 0 < x < 1, got " + x.get_str());
  // 1/x = q/p
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class a, r;
  mpz_tdiv_qr(a.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpq_class next(r, p);
  next.canonicalize();
  return {next, to_digit(a)};
}

NicfStep<AdaptiveReal> nicf_map(const AdaptiveReal& x) {
  if (!in_half_open(x)) throw OutsideDomain("NICF map needs -1/2 <= x < 1/2, got " + x.to_decimal());
  if (x.is_zero()) return {AdaptiveReal(x.precision()), 0, 0, true};
  const int eps = x.sign();
  const AdaptiveReal inv = x.abs().reciprocal();  // eps/x = 1/|x|
  const mpz_class b = (inv + 0.5).floor();
  return {inv - b, to_digit(b), eps, false};
}

NicfStep<mpq_class> nicf_map(const mpq_class& x) {
  if (!in_half_open(x)) throw OutsideDomain("NICF map needs -1/2 <= x < 1/2, got " + x.get_str());
  if (x == 0) return {mpq_class(0), 0, 0, true};
  const int eps = sgn(x);
  const mpz_class p = abs(x.get_num());
  const mpz_class& q = x.get_den();
  // b = floor((2q + p) / (2p)); next = (q - b p) / p
  mpz_class b;
  mpz_class num = 2 * q + p;
  mpz_class den = 2 * p;
  mpz_fdiv_q(b.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpq_class next(q - b * p, p);
  next.canonicalize();
  return {next, to_digit(b), eps, false};
}

HurwitzStep<AdaptiveComplex> hurwitz_map(const AdaptiveComplex& z) {
  if (z.is_zero()) throw ExactZero("Hurwitz map at 0");
  if (!in_box(z)) throw OutsideDomain("Hurwitz map needs z in B");
  const AdaptiveComplex inv = z.reciprocal();
  const GaussianInt g = nearest_gaussian(inv);
  AdaptiveComplex next{inv.re - mpz_class(static_cast<long>(g.re)),
                       inv.im - mpz_class(static_cast<long>(g.im))};
  return {std::move(next), g};
}

HurwitzStep<ComplexRational> hurwitz_map(const ComplexRational& z) {
  if (z.re == 0 && z.im == 0) throw ExactZero("Hurwitz map at 0");
  if (!in_box(z)) throw OutsideDomain("Hurwitz map needs z in B");
  const mpq_class n = z.re * z.re + z.im * z.im;
  const ComplexRational inv{z.re / n, -z.im / n};
  const GaussianInt g = nearest_gaussian(inv);
  return {{inv.re - static_cast<long>(g.re), inv.im - static_cast<long>(g.im)}, g};
}

}  // namespace cfevt
