#include "cfevt/numerics/adaptive.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

mpfr_prec_t checked(std::size_t bits) {
  if (bits < kMinPrecision || bits > static_cast<std::size_t>(MPFR_PREC_MAX)) {
    throw InvalidArgument("precision out of range: " + std::to_string(bits));
  }
  return static_cast<mpfr_prec_t>(bits);
}

std::size_t max_prec(const AdaptiveReal& a, const AdaptiveReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

AdaptiveReal::AdaptiveReal(std::size_t bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_zero(value_, 1);
}

AdaptiveReal::AdaptiveReal(double value, std::size_t bits) : AdaptiveReal(bits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

AdaptiveReal::AdaptiveReal(const AdaptiveReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

AdaptiveReal::AdaptiveReal(AdaptiveReal&& other) noexcept {
  // Leave `other` as a valid 2-bit zero so its destructor stays well defined.
  mpfr_init2(value_, kMinPrecision);
  mpfr_swap(value_, other.value_);
}

AdaptiveReal& AdaptiveReal::operator=(const AdaptiveReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

AdaptiveReal& AdaptiveReal::operator=(AdaptiveReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

AdaptiveReal::~AdaptiveReal() { mpfr_clear(value_); }

AdaptiveReal AdaptiveReal::from_rational(const mpq_class& q, std::size_t bits) {
  AdaptiveReal r(bits);
  mpfr_set_q(r.value_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

AdaptiveReal AdaptiveReal::from_integer(const mpz_class& z, std::size_t bits) {
  AdaptiveReal r(bits);
  mpfr_set_z(r.value_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

AdaptiveReal AdaptiveReal::from_decimal(std::string_view text, std::size_t bits) {
  AdaptiveReal r(bits);
  std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw InvalidArgument("not a decimal literal: '" + s + "'");
  }
  return r;
}

AdaptiveReal AdaptiveReal::pi(std::size_t bits) {
  AdaptiveReal r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

AdaptiveReal AdaptiveReal::sqrt2(std::size_t bits) {
  AdaptiveReal r(bits);
  mpfr_sqrt_ui(r.value_, 2, MPFR_RNDN);
  return r;
}

AdaptiveReal AdaptiveReal::golden(std::size_t bits) {
  // (1 + sqrt 5) / 2, computed with guard bits then rounded once.
  AdaptiveReal tmp(bits + 16);
  mpfr_sqrt_ui(tmp.value_, 5, MPFR_RNDN);
  mpfr_add_ui(tmp.value_, tmp.value_, 1, MPFR_RNDN);
  mpfr_div_2ui(tmp.value_, tmp.value_, 1, MPFR_RNDN);
  return tmp.with_precision(bits);
}

std::size_t AdaptiveReal::precision() const noexcept {
  return static_cast<std::size_t>(mpfr_get_prec(value_));
}

AdaptiveReal AdaptiveReal::with_precision(std::size_t bits) const {
  AdaptiveReal r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

bool AdaptiveReal::is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }

int AdaptiveReal::sign() const noexcept { return mpfr_sgn(value_); }

AdaptiveReal AdaptiveReal::operator-() const {
  AdaptiveReal r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

AdaptiveReal AdaptiveReal::abs() const {
  AdaptiveReal r(precision());
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

AdaptiveReal AdaptiveReal::reciprocal() const {
  if (is_zero()) throw ExactZero("reciprocal of zero");
  AdaptiveReal r(precision());
  mpfr_ui_div(r.value_, 1, value_, MPFR_RNDN);
  return r;
}

AdaptiveReal AdaptiveReal::sqrt() const {
  AdaptiveReal r(precision());
  mpfr_sqrt(r.value_, value_, MPFR_RNDN);
  return r;
}

AdaptiveReal operator+(const AdaptiveReal& a, const AdaptiveReal& b) {
  AdaptiveReal r(max_prec(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

AdaptiveReal operator-(const AdaptiveReal& a, const AdaptiveReal& b) {
  AdaptiveReal r(max_prec(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

AdaptiveReal operator*(const AdaptiveReal& a, const AdaptiveReal& b) {
  AdaptiveReal r(max_prec(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

AdaptiveReal operator/(const AdaptiveReal& a, const AdaptiveReal& b) {
  if (b.is_zero()) throw ExactZero("division by zero");
  AdaptiveReal r(max_prec(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

AdaptiveReal operator-(const AdaptiveReal& a, const mpz_class& z) {
  AdaptiveReal r(a.precision());
  mpfr_sub_z(r.value_, a.value_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

AdaptiveReal operator+(const AdaptiveReal& a, double d) {
  AdaptiveReal r(a.precision());
  mpfr_add_d(r.value_, a.value_, d, MPFR_RNDN);
  return r;
}

bool operator==(const AdaptiveReal& a, const AdaptiveReal& b) {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

std::partial_ordering operator<=>(const AdaptiveReal& a, const AdaptiveReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const AdaptiveReal& a, double d) { return mpfr_cmp_d(a.value_, d) == 0; }

std::partial_ordering operator<=>(const AdaptiveReal& a, double d) {
  if (mpfr_nan_p(a.value_) || d != d) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, d);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

mpz_class AdaptiveReal::floor() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

mpz_class AdaptiveReal::round_half_down() const {
  // The fractional part of a binary float is exact at the same precision.
  mpz_class f = floor();
  AdaptiveReal frac = *this - f;
  if (mpfr_cmp_d(frac.value_, 0.5) > 0) f += 1;
  return f;
}

mpq_class AdaptiveReal::to_rational() const {
  if (!mpfr_number_p(value_)) throw InvalidArgument("non-finite value has no rational form");
  mpq_class q;
  if (is_zero()) return q;
  mpz_class mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
  if (e >= 0) {
    mpz_mul_2exp(mant.get_mpz_t(), mant.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q = mant;
  } else {
    mpz_class den;
    mpz_setbit(den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    q = mpq_class(mant, den);
    q.canonicalize();
  }
  return q;
}

double AdaptiveReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string AdaptiveReal::to_decimal(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  const std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
  return std::string(buf.data());
}

std::size_t AdaptiveComplex::precision() const noexcept {
  return std::min(re.precision(), im.precision());
}

AdaptiveReal AdaptiveComplex::norm() const { return re * re + im * im; }

AdaptiveReal AdaptiveComplex::abs() const { return norm().sqrt(); }

AdaptiveComplex AdaptiveComplex::reciprocal() const {
  if (is_zero()) throw ExactZero("reciprocal of complex zero");
  // Guard bits absorb the rounding of the norm before the final rounding.
  const std::size_t bits = std::max(re.precision(), im.precision());
  const AdaptiveReal r = re.with_precision(bits + 8);
  const AdaptiveReal i = im.with_precision(bits + 8);
  const AdaptiveReal n = r * r + i * i;
  return {(r / n).with_precision(bits), (-i / n).with_precision(bits)};
}

AdaptiveComplex operator+(const AdaptiveComplex& a, const AdaptiveComplex& b) {
  return {a.re + b.re, a.im + b.im};
}

AdaptiveComplex operator-(const AdaptiveComplex& a, const AdaptiveComplex& b) {
  return {a.re - b.re, a.im - b.im};
}

AdaptiveComplex operator*(const AdaptiveComplex& a, const AdaptiveComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace cfevt
