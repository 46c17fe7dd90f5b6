#pragma once

// Arbitrary-precision real and complex scalars backed by MPFR.
//
// An AdaptiveReal is a binary floating-point value m * 2^e whose mantissa
// carries exactly `precision()` bits. Every value is therefore an exact
// dyadic rational, and `to_rational()` recovers it without loss. Arithmetic
// rounds to nearest at max(precision of the operands).

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace cfevt {

inline constexpr std::size_t kMinPrecision = 2;

class AdaptiveReal {
 public:
  explicit AdaptiveReal(std::size_t bits = 53);
  AdaptiveReal(double value, std::size_t bits);
  AdaptiveReal(const AdaptiveReal& other);
  AdaptiveReal(AdaptiveReal&& other) noexcept;
  AdaptiveReal& operator=(const AdaptiveReal& other);
  AdaptiveReal& operator=(AdaptiveReal&& other) noexcept;
  ~AdaptiveReal();

  /// Nearest value at `bits` to an exact rational.
  static AdaptiveReal from_rational(const mpq_class& q, std::size_t bits);
  static AdaptiveReal from_integer(const mpz_class& z, std::size_t bits);
  /// Parses a decimal literal such as "-0.125" or "3.14e-2".
  static AdaptiveReal from_decimal(std::string_view text, std::size_t bits);

  static AdaptiveReal pi(std::size_t bits);
  static AdaptiveReal sqrt2(std::size_t bits);
  static AdaptiveReal golden(std::size_t bits);

  std::size_t precision() const noexcept;
  /// Copy rounded to a new precision.
  AdaptiveReal with_precision(std::size_t bits) const;

  bool is_zero() const noexcept;
  int sign() const noexcept;

  AdaptiveReal operator-() const;
  AdaptiveReal abs() const;
  AdaptiveReal reciprocal() const;
  AdaptiveReal sqrt() const;

  friend AdaptiveReal operator+(const AdaptiveReal& a, const AdaptiveReal& b);
  friend AdaptiveReal operator-(const AdaptiveReal& a, const AdaptiveReal& b);
  friend AdaptiveReal operator*(const AdaptiveReal& a, const AdaptiveReal& b);
  friend AdaptiveReal operator/(const AdaptiveReal& a, const AdaptiveReal& b);
  /// Exact: the integer is rounded into the result at the operand's precision.
  friend AdaptiveReal operator-(const AdaptiveReal& a, const mpz_class& z);
  friend AdaptiveReal operator+(const AdaptiveReal& a, double d);

  friend bool operator==(const AdaptiveReal& a, const AdaptiveReal& b);
  friend std::partial_ordering operator<=>(const AdaptiveReal& a, const AdaptiveReal& b);
  friend bool operator==(const AdaptiveReal& a, double d);
  friend std::partial_ordering operator<=>(const AdaptiveReal& a, double d);

  mpz_class floor() const;
  /// Nearest integer, ties rounded towards -infinity.
  mpz_class round_half_down() const;
  mpq_class to_rational() const;
  double to_double() const;
  /// Decimal rendering with `digits` significant digits.
  std::string to_decimal(int digits = 17) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

 private:
  mpfr_t value_;
};

/// A complex number whose parts are AdaptiveReals.
struct AdaptiveComplex {
  AdaptiveReal re;
  AdaptiveReal im;

  AdaptiveComplex() = default;
  AdaptiveComplex(AdaptiveReal r, AdaptiveReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit AdaptiveComplex(std::size_t bits) : re(bits), im(bits) {}

  std::size_t precision() const noexcept;
  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

  AdaptiveComplex conj() const { return {re, -im}; }
  AdaptiveReal norm() const;  // re^2 + im^2
  AdaptiveReal abs() const;
  /// 1/z; throws ExactZero for z == 0.
  AdaptiveComplex reciprocal() const;

  friend AdaptiveComplex operator+(const AdaptiveComplex& a, const AdaptiveComplex& b);
  friend AdaptiveComplex operator-(const AdaptiveComplex& a, const AdaptiveComplex& b);
  friend AdaptiveComplex operator*(const AdaptiveComplex& a, const AdaptiveComplex& b);
};

}  // namespace cfevt
