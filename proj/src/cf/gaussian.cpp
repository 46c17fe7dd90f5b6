#include "cfevt/cf/gaussian.hpp"

#include <cstdlib>

#include "cfevt/errors.hpp"

namespace cfevt {

std::int64_t GaussianInt::norm() const {
  constexpr std::int64_t kLimit = std::int64_t{1} << 31;
  if (std::llabs(re) > kLimit || std::llabs(im) > kLimit) {
    throw DigitOverflow("Gaussian integer too large for an exact int64 norm: " + to_string(*this));
  }
  return re * re + im * im;
}

std::string to_string(const GaussianInt& g) {
  if (g.im == 0) return std::to_string(g.re);
  std::string imag;
  if (g.im == 1) {
    imag = "i";
  } else if (g.im == -1) {
    imag = "-i";
  } else {
    imag = std::to_string(g.im) + "i";
  }
  if (g.re == 0) return imag;
  return std::to_string(g.re) + (g.im > 0 ? "+" : "") + imag;
}

mpz_class round_half_down(const mpq_class& t) {
  // ceil((2 num - den) / (2 den))
  mpz_class num = 2 * t.get_num() - t.get_den();
  mpz_class den = 2 * t.get_den();
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

std::int64_t to_digit(const mpz_class& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) {
    throw DigitOverflow("digit does not fit in 64 bits: " + z.get_str());
  }
  return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

GaussianInt nearest_gaussian(const AdaptiveComplex& z) {
  return {to_digit(z.re.round_half_down()), to_digit(z.im.round_half_down())};
}

GaussianInt nearest_gaussian(const ComplexRational& z) {
  return {to_digit(round_half_down(z.re)), to_digit(round_half_down(z.im))};
}

}  // namespace cfevt
