#pragma once

// Single steps of the three digit-generating maps.
//
// Each map comes in two flavours: an AdaptiveReal/AdaptiveComplex version
// that rounds at the input's precision, and an exact version over rationals.
// The expansion engines use the exact flavour (see exact_engines.hpp).

#include <cstdint>

#include <gmpxx.h>

#include "cfevt/cf/gaussian.hpp"
#include "cfevt/numerics/adaptive.hpp"
#include "cfevt/numerics/source.hpp"

namespace cfevt {

template <typename Value>
struct GaussStep {
  Value next;              // {1/x}
  std::int64_t digit = 0;  // floor(1/x) >= 1
};

/// x -> {1/x} on (0, 1). Throws ExactZero for x == 0, OutsideDomain otherwise
/// when x is not in (0, 1).
GaussStep<AdaptiveReal> gauss_map(const AdaptiveReal& x);
GaussStep<mpq_class> gauss_map(const mpq_class& x);

template <typename Value>
struct NicfStep {
  Value next;
  std::int64_t b = 0;  // floor(1/|x| + 1/2) >= 2
  int eps = 0;         // sign of x
  bool terminated = false;
};

/// T_N(x) = eps/x - floor(eps/x + 1/2) on [-1/2, 1/2), with T_N(0) = 0 reported
/// as terminated. Throws OutsideDomain for x outside [-1/2, 1/2).
NicfStep<AdaptiveReal> nicf_map(const AdaptiveReal& x);
NicfStep<mpq_class> nicf_map(const mpq_class& x);

template <typename Value>
struct HurwitzStep {
  Value next;
  GaussianInt digit;
};

/// Tz = 1/z - [1/z]_i on B. Throws ExactZero for z == 0 and OutsideDomain for
/// z outside B. The digit always has norm >= 2.
HurwitzStep<AdaptiveComplex> hurwitz_map(const AdaptiveComplex& z);
HurwitzStep<ComplexRational> hurwitz_map(const ComplexRational& z);

/// Membership in B = {-1/2 <= x, y < 1/2}.
bool in_box(const AdaptiveComplex& z);
bool in_box(const ComplexRational& z);

}  // namespace cfevt
