#pragma once

// Inputs that can be evaluated at any requested precision.
//
// A source yields, for each precision p, an exact rational approximation of
// the number it names: exact rationals return themselves, named constants
// return their p-bit MPFR rounding, and random sources return the midpoint of
// the dyadic cell selected by the first p bits of their substream.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cfevt/numerics/random_stream.hpp"

namespace cfevt {

/// Parses a decimal literal ("-0.25", "1e-3", "3") or fraction ("22/7") exactly.
mpq_class parse_exact_rational(std::string_view text);

class RealSource {
 public:
  using Evaluator = std::function<mpq_class(std::size_t bits)>;

  static RealSource exact(mpq_class value);
  static RealSource from_evaluator(Evaluator f, std::string label);
  /// Named constants: "pi", "sqrt2", "golden", "e".
  static RealSource named(std::string_view name);
  static RealSource uniform(RandomStream stream);
  /// A named constant or an exact literal.
  static RealSource parse(std::string_view text);

  mpq_class at(std::size_t bits) const { return eval_(bits); }
  bool is_exact() const noexcept { return exact_; }
  const std::string& label() const noexcept { return label_; }

  /// This source shifted by an exact rational.
  RealSource offset(const mpq_class& delta) const;

 private:
  RealSource(Evaluator f, bool exact, std::string label)
      : eval_(std::move(f)), exact_(exact), label_(std::move(label)) {}

  Evaluator eval_;
  bool exact_ = false;
  std::string label_;
};

struct ComplexRational {
  mpq_class re;
  mpq_class im;
};

class ComplexSource {
 public:
  using Evaluator = std::function<ComplexRational(std::size_t bits)>;

  static ComplexSource exact(mpq_class re, mpq_class im);
  static ComplexSource from_parts(RealSource re, RealSource im);
  static ComplexSource from_evaluator(Evaluator f, std::string label);
  /// Uniform on B; agrees with sample_uniform_box at every precision.
  static ComplexSource uniform_box(RandomStream stream);
  /// "re,im" with real sources on each side, or "a+bi" / "a-bi" / "bi".
  static ComplexSource parse(std::string_view text);

  ComplexRational at(std::size_t bits) const { return eval_(bits); }
  bool is_exact() const noexcept { return exact_; }
  const std::string& label() const noexcept { return label_; }

 private:
  ComplexSource(Evaluator f, bool exact, std::string label)
      : eval_(std::move(f)), exact_(exact), label_(std::move(label)) {}

  Evaluator eval_;
  bool exact_ = false;
  std::string label_;
};

}  // namespace cfevt
