#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cfevt/numerics/adaptive.hpp"
#include "cfevt/numerics/source.hpp"

namespace cfevt {

/// a + bi with machine-integer parts. Digits produced by the Hurwitz engine
/// are GaussianInts; an engine that would produce a part outside the int64
/// range raises DigitOverflow instead.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  /// re^2 + im^2. Exact for |re|, |im| <= 2^31.
  std::int64_t norm() const;
  double modulus() const { return std::hypot(static_cast<double>(re), static_cast<double>(im)); }
  GaussianInt conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator-(GaussianInt a, GaussianInt b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

/// "3", "-2i", "1-2i".
std::string to_string(const GaussianInt& g);

/// Arbitrary-size Gaussian integer used by convergent recurrences.
struct BigGaussian {
  mpz_class re;
  mpz_class im;

  BigGaussian() = default;
  BigGaussian(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigGaussian(const GaussianInt& g) : re(static_cast<long>(g.re)), im(static_cast<long>(g.im)) {}

  mpz_class norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const BigGaussian& a, const BigGaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend BigGaussian operator+(const BigGaussian& a, const BigGaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigGaussian operator*(const BigGaussian& a, const BigGaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

/// Nearest integer with ties rounded down: ceil(t - 1/2).
mpz_class round_half_down(const mpq_class& t);

/// Nearest Gaussian integer, ties broken by rounding down in each part.
GaussianInt nearest_gaussian(const AdaptiveComplex& z);
GaussianInt nearest_gaussian(const ComplexRational& z);

/// Converts an mpz to int64, raising DigitOverflow when it does not fit.
std::int64_t to_digit(const mpz_class& z);

}  // namespace cfevt
