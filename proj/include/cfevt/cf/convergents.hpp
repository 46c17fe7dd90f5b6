#pragma once

// Convergents of the three expansions and reconstruction checks.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "cfevt/cf/expansion.hpp"
#include "cfevt/cf/gaussian.hpp"

namespace cfevt {

struct RationalConvergent {
  mpz_class p;
  mpz_class q;
  mpq_class value() const;
};

struct GaussianConvergent {
  BigGaussian p;
  BigGaussian q;
  ComplexRational value() const;
};

// Entry k is the approximant built from a0 and the first k+1 digits.
// RCF and HCCF use p_n = a_n p_{n-1} + p_{n-2}; NICF uses
// p_n = b_n p_{n-1} + eps_n p_{n-2}. q_n follows the same rule.
std::vector<RationalConvergent> convergents(const RcfExpansion& e);
std::vector<RationalConvergent> convergents(const NicfExpansion& e);
std::vector<GaussianConvergent> convergents(const HccfExpansion& e);

struct ReconstructionReport {
  bool ok = false;               // errors shrink and the last one is below tol
  std::vector<double> errors;    // |input - p_k/q_k| for each convergent
  double final_error = 0.0;
};

/// Compares the convergents against the input. Throws InvalidArgument for
/// fewer than 3 digits and ReconstructionDivergence when an error fails to
/// drop strictly from digit k-2 to digit k.
ReconstructionReport reconstruct_check(const mpq_class& input, const RcfExpansion& e, double tol);
ReconstructionReport reconstruct_check(const mpq_class& input, const NicfExpansion& e, double tol);
ReconstructionReport reconstruct_check(const ComplexRational& input, const HccfExpansion& e,
                                       double tol);

}  // namespace cfevt
