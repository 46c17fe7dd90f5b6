#include "cfevt/cf/convergents.hpp"

#include <cmath>
#include <string>

#include <mpfr.h>

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

// Converts without underflowing tiny errors to zero before they are compared.
double to_double(const mpq_class& q) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

template <typename Num>
std::vector<RationalConvergent> real_convergents(std::int64_t a0, const std::vector<std::int64_t>& b,
                                                 const Num& numerator) {
  std::vector<RationalConvergent> out;
  out.reserve(b.size());
  mpz_class p2 = 1, q2 = 0;  // p_{-1}, q_{-1}
  mpz_class p1 = static_cast<long>(a0), q1 = 1;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const long bk = static_cast<long>(b[k]);
    const long ek = numerator(k);
    mpz_class p = bk * p1 + ek * p2;
    mpz_class q = bk * q1 + ek * q2;
    p2 = std::move(p1);
    q2 = std::move(q1);
    p1 = p;
    q1 = q;
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

// `exact` holds squared (complex) or plain (real) errors; the check runs on
// those and the report lists their magnitudes.
ReconstructionReport finish(const std::vector<mpq_class>& exact, bool squared, double tol) {
  if (exact.size() < 3) throw InvalidArgument("reconstruct_check needs at least 3 digits");
  ReconstructionReport rep;
  rep.errors.reserve(exact.size());
  for (const auto& e : exact) {
    const double d = to_double(e);
    rep.errors.push_back(squared ? std::sqrt(d) : d);
  }
  for (std::size_t k = 2; k < exact.size(); ++k) {
    if (exact[k - 2] == 0) continue;
    if (!(exact[k] < exact[k - 2])) {
      throw ReconstructionDivergence("convergent error did not shrink from digit " +
                                     std::to_string(k - 1) + " to digit " + std::to_string(k + 1));
    }
  }
  rep.final_error = rep.errors.back();
  rep.ok = rep.final_error < tol;
  return rep;
}

template <typename Expansion>
ReconstructionReport real_check(const mpq_class& input, const Expansion& e, double tol) {
  std::vector<mpq_class> exact;
  for (const auto& c : convergents(e)) exact.push_back(abs(input - c.value()));
  return finish(exact, false, tol);
}

}  // namespace

mpq_class RationalConvergent::value() const {
  mpq_class v(p, q);
  v.canonicalize();
  return v;
}

ComplexRational GaussianConvergent::value() const {
  // p/q = p conj(q) / N(q)
  const mpz_class n = q.norm();
  mpq_class re(p.re * q.re + p.im * q.im, n);
  mpq_class im(p.im * q.re - p.re * q.im, n);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

std::vector<RationalConvergent> convergents(const RcfExpansion& e) {
  return real_convergents(e.a0, e.digits, [](std::size_t) { return 1L; });
}

std::vector<RationalConvergent> convergents(const NicfExpansion& e) {
  return real_convergents(e.a0, e.b, [&](std::size_t k) { return static_cast<long>(e.eps[k]); });
}

std::vector<GaussianConvergent> convergents(const HccfExpansion& e) {
  std::vector<GaussianConvergent> out;
  out.reserve(e.digits.size());
  BigGaussian p2(1, 0), q2(0, 0);
  BigGaussian p1(e.a0), q1(1, 0);
  for (const auto& d : e.digits) {
    const BigGaussian a(d);
    BigGaussian p = a * p1 + p2;
    BigGaussian q = a * q1 + q2;
    p2 = std::move(p1);
    q2 = std::move(q1);
    p1 = p;
    q1 = q;
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

ReconstructionReport reconstruct_check(const mpq_class& input, const RcfExpansion& e, double tol) {
  return real_check(input, e, tol);
}

ReconstructionReport reconstruct_check(const mpq_class& input, const NicfExpansion& e, double tol) {
  return real_check(input, e, tol);
}

ReconstructionReport reconstruct_check(const ComplexRational& input, const HccfExpansion& e,
                                       double tol) {
  std::vector<mpq_class> exact;
  for (const auto& c : convergents(e)) {
    const auto v = c.value();
    const mpq_class dr = input.re - v.re;
    const mpq_class di = input.im - v.im;
    exact.push_back(dr * dr + di * di);
  }
  return finish(exact, true, tol);
}

}  // namespace cfevt
