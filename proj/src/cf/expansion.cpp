#include "cfevt/cf/expansion.hpp"

#include <algorithm>

#include "cfevt/cf/exact_engines.hpp"
#include "cfevt/cf/maps.hpp"
#include "cfevt/errors.hpp"
#include "cfevt/numerics/refine.hpp"

namespace cfevt {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::rcf: return "rcf";
    case Family::nicf: return "nicf";
    case Family::hccf: return "hccf";
  }
  return "?";
}

std::string_view to_string(Status s) {
  return s == Status::terminated ? "terminated" : "ongoing";
}

Family parse_family(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "rcf") return Family::rcf;
  if (t == "nicf") return Family::nicf;
  if (t == "hccf") return Family::hccf;
  throw InvalidArgument("unknown family '" + std::string(text) + "' (rcf, nicf, hccf)");
}

std::vector<std::int64_t> NicfExpansion::signed_digits() const {
  std::vector<std::int64_t> out(b.size());
  int sign = 1;
  for (std::size_t i = 0; i < b.size(); ++i) {
    sign *= eps[i];
    out[i] = sign * b[i];
  }
  return out;
}

Family family_of(const Expansion& e) {
  return static_cast<Family>(e.index());
}

Status status_of(const Expansion& e) {
  return std::visit([](const auto& x) { return x.status; }, e);
}

std::size_t digit_count(const RcfExpansion& e) { return e.digits.size(); }
std::size_t digit_count(const NicfExpansion& e) { return e.b.size(); }
std::size_t digit_count(const HccfExpansion& e) { return e.digits.size(); }

std::size_t digit_count(const Expansion& e) {
  return std::visit([](const auto& x) { return digit_count(x); }, e);
}

std::vector<double> digit_moduli(const Expansion& e) {
  std::vector<double> out;
  if (const auto* r = std::get_if<RcfExpansion>(&e)) {
    for (auto a : r->digits) out.push_back(static_cast<double>(a));
  } else if (const auto* n = std::get_if<NicfExpansion>(&e)) {
    for (auto b : n->b) out.push_back(static_cast<double>(b));
  } else {
    for (const auto& g : std::get<HccfExpansion>(e).digits) out.push_back(g.modulus());
  }
  return out;
}

namespace {

template <typename T>
std::size_t prefix_of(const std::vector<T>& a, const std::vector<T>& b) {
  const auto m = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(m.first - a.begin());
}

}  // namespace

std::size_t common_prefix(const RcfExpansion& a, const RcfExpansion& b) {
  return a.a0 == b.a0 ? prefix_of(a.digits, b.digits) : 0;
}

std::size_t common_prefix(const NicfExpansion& a, const NicfExpansion& b) {
  if (a.a0 != b.a0) return 0;
  return std::min(prefix_of(a.b, b.b), prefix_of(a.eps, b.eps));
}

std::size_t common_prefix(const HccfExpansion& a, const HccfExpansion& b) {
  return a.a0 == b.a0 ? prefix_of(a.digits, b.digits) : 0;
}

RcfExpansion truncated(const RcfExpansion& e, std::size_t k) {
  RcfExpansion out{e.a0, {}, Status::ongoing};
  out.digits.assign(e.digits.begin(), e.digits.begin() + std::min(k, e.digits.size()));
  return out;
}

NicfExpansion truncated(const NicfExpansion& e, std::size_t k) {
  NicfExpansion out;
  out.a0 = e.a0;
  k = std::min(k, e.b.size());
  out.b.assign(e.b.begin(), e.b.begin() + k);
  out.eps.assign(e.eps.begin(), e.eps.begin() + k);
  return out;
}

HccfExpansion truncated(const HccfExpansion& e, std::size_t k) {
  HccfExpansion out{e.a0, {}, Status::ongoing};
  out.digits.assign(e.digits.begin(), e.digits.begin() + std::min(k, e.digits.size()));
  return out;
}

RcfExpansion expand_rcf_exact(const mpq_class& x, std::size_t max_digits) {
  RcfExpansion out;
  mpz_class a0;
  mpz_fdiv_q(a0.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  out.a0 = to_digit(a0);
  GaussEngine engine(x - a0);
  out.digits.reserve(max_digits);
  std::int64_t a = 0;
  while (out.digits.size() < max_digits && engine.step(a)) out.digits.push_back(a);
  if (engine.terminated()) out.status = Status::terminated;
  return out;
}

NicfExpansion expand_nicf_exact(const mpq_class& x, std::size_t max_digits) {
  NicfExpansion out;
  const mpq_class shifted = x + mpq_class(1, 2);
  mpz_class a0;
  mpz_fdiv_q(a0.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  out.a0 = to_digit(a0);
  NicfEngine engine(x - a0);
  out.b.reserve(max_digits);
  out.eps.reserve(max_digits);
  std::int64_t b = 0;
  int eps = 0;
  while (out.b.size() < max_digits && engine.step(b, eps)) {
    out.b.push_back(b);
    out.eps.push_back(eps);
  }
  if (engine.terminated()) out.status = Status::terminated;
  return out;
}

HccfExpansion expand_hccf_exact(const ComplexRational& z, std::size_t max_digits) {
  HccfExpansion out;
  ComplexRational frac = z;
  if (!in_box(z)) {
    out.a0 = nearest_gaussian(z);
    frac.re -= static_cast<long>(out.a0.re);
    frac.im -= static_cast<long>(out.a0.im);
  }
  HurwitzEngine engine(frac);
  out.digits.reserve(max_digits);
  GaussianInt g;
  while (out.digits.size() < max_digits && engine.step(g)) out.digits.push_back(g);
  if (engine.terminated()) out.status = Status::terminated;
  return out;
}

std::size_t default_initial_bits(std::size_t n) { return 64 + 8 * n; }

namespace {

RefineLimits limits_for(std::size_t n, std::optional<std::size_t> p0) {
  return {p0.value_or(default_initial_bits(n)), kMaxRefineBits};
}

}  // namespace

RcfExpansion refine_and_agree_rcf(const RealSource& x, std::size_t n,
                                  std::optional<std::size_t> p0) {
  return refine_and_agree([&](std::size_t bits) { return x.at(bits); },
                          [](const mpq_class& v, std::size_t k) { return expand_rcf_exact(v, k); },
                          n, limits_for(n, p0));
}

NicfExpansion refine_and_agree_nicf(const RealSource& x, std::size_t n,
                                    std::optional<std::size_t> p0) {
  return refine_and_agree([&](std::size_t bits) { return x.at(bits); },
                          [](const mpq_class& v, std::size_t k) { return expand_nicf_exact(v, k); },
                          n, limits_for(n, p0));
}

HccfExpansion refine_and_agree_hccf(const ComplexSource& z, std::size_t n,
                                    std::optional<std::size_t> p0) {
  return refine_and_agree(
      [&](std::size_t bits) { return z.at(bits); },
      [](const ComplexRational& v, std::size_t k) { return expand_hccf_exact(v, k); }, n,
      limits_for(n, p0));
}

Expansion expand(Family family, const AnySource& input, std::size_t n,
                 std::optional<std::size_t> p0) {
  if (family == Family::hccf) {
    const auto* z = std::get_if<ComplexSource>(&input);
    if (!z) throw InvalidArgument("hccf needs a complex input");
    return refine_and_agree_hccf(*z, n, p0);
  }
  const auto* x = std::get_if<RealSource>(&input);
  if (!x) throw InvalidArgument(std::string(to_string(family)) + " needs a real input");
  if (family == Family::rcf) return refine_and_agree_rcf(*x, n, p0);
  return refine_and_agree_nicf(*x, n, p0);
}

}  // namespace cfevt
