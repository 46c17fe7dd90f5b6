#pragma once

// Two-precision digit certification.
//
// Iterating an expanding map loses a roughly constant number of bits per
// digit, so a digit is trusted only if it comes out identically from the
// input evaluated at precision p and at 2p. The precision doubles until the
// requested number of digits agree.

#include <algorithm>
#include <cstddef>
#include <string>

#include "cfevt/errors.hpp"

namespace cfevt {

/// Record types passed through refine_and_agree must provide, found by ADL:
///   std::size_t digit_count(const R&);
///   std::size_t common_prefix(const R&, const R&);  // also compares a0
///   R truncated(const R&, std::size_t k);            // first k digits, Ongoing
///   bool is_terminated(const R&);
template <typename Record>
concept DigitRecord = requires(const Record& r, std::size_t k) {
  { digit_count(r) } -> std::convertible_to<std::size_t>;
  { common_prefix(r, r) } -> std::convertible_to<std::size_t>;
  { truncated(r, k) } -> std::convertible_to<Record>;
  { is_terminated(r) } -> std::convertible_to<bool>;
};

struct RefineLimits {
  std::size_t initial_bits;
  std::size_t max_bits;
};

/// `evaluate(bits)` returns the input at a precision; `expand(value, n)`
/// returns up to n exact digits of that value.
template <typename Evaluate, typename Expand>
auto refine_and_agree(Evaluate&& evaluate, Expand&& expand, std::size_t n, RefineLimits limits)
    -> decltype(expand(evaluate(std::size_t{}), n))
  requires DigitRecord<decltype(expand(evaluate(std::size_t{}), n))>
{
  if (n == 0) throw InvalidArgument("refine_and_agree needs n >= 1");
  std::size_t p = std::max<std::size_t>(limits.initial_bits, 2);
  while (2 * p <= limits.max_bits) {
    const auto lo = expand(evaluate(p), n);
    const auto hi = expand(evaluate(2 * p), n);
    const std::size_t agree = common_prefix(lo, hi);
    if (is_terminated(lo) && is_terminated(hi) && agree == digit_count(lo) &&
        agree == digit_count(hi)) {
      return lo;
    }
    if (agree >= n) return truncated(lo, n);
    p *= 2;
  }
  throw PrecisionExhausted("fewer than " + std::to_string(n) +
                           " digits agree at the precision cap of " +
                           std::to_string(limits.max_bits) + " bits");
}

}  // namespace cfevt
