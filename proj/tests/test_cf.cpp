#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "cfevt/cf/convergents.hpp"
#include "cfevt/cf/exact_engines.hpp"
#include "cfevt/cf/expansion.hpp"
#include "cfevt/cf/maps.hpp"
#include "cfevt/cf/naive_trap.hpp"
#include "cfevt/cf/serialize.hpp"
#include "cfevt/errors.hpp"

using namespace cfevt;

namespace {

const std::vector<std::int64_t> kPiRcf{7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14,
                                       2, 1, 1, 2, 2, 2, 2, 1, 84, 2, 1, 1};
const std::vector<std::int64_t> kPiNicf{7, 16, 294, 3, 4, 5, 15, 3, 2, 2, 2, 2,
                                        3, 85, 3, 2, 15, 3, 14, 5, 2, 6, 6};

ComplexRational sqrt2_minus_1_i(std::size_t bits) {
  return {0, (AdaptiveReal::sqrt2(bits) - mpz_class(1)).to_rational()};
}

}  // namespace

TEST_CASE("gauss map examples") {
  const auto x = AdaptiveReal::sqrt2(256) - mpz_class(1);
  const auto s = gauss_map(x);
  CHECK(s.digit == 2);
  CHECK(std::abs(s.next.to_double() - x.to_double()) < 1e-15);

  const auto third = gauss_map(mpq_class(1, 3));
  CHECK(third.digit == 3);
  CHECK(third.next == 0);
  CHECK_THROWS_AS(gauss_map(third.next), ExactZero);

  CHECK(gauss_map(AdaptiveReal::pi(128) - mpz_class(3)).digit == 7);
}

TEST_CASE("nicf map examples") {
  const auto s = nicf_map(mpq_class(2, 5));
  CHECK(s.next == mpq_class(-1, 2));
  CHECK(s.b == 3);
  CHECK(s.eps == 1);
  CHECK(nicf_map(mpq_class(0)).terminated);
  CHECK_THROWS_AS(nicf_map(mpq_class(1, 2)), OutsideDomain);

  auto x = AdaptiveReal::pi(512) - mpz_class(3);
  std::vector<std::int64_t> b;
  for (int k = 0; k < 7; ++k) {
    const auto step = nicf_map(x);
    b.push_back(step.b);
    x = step.next;
  }
  CHECK(b == std::vector<std::int64_t>{7, 16, 294, 3, 4, 5, 15});
}

TEST_CASE("nearest gaussian rounds ties down per coordinate") {
  CHECK(nearest_gaussian(ComplexRational{mpq_class(1, 2), mpq_class(1, 2)}) == GaussianInt{0, 0});
  CHECK(nearest_gaussian(ComplexRational{mpq_class(12, 5), mpq_class(-17, 10)}) == GaussianInt{2, -2});
  CHECK(nearest_gaussian(ComplexRational{mpq_class(-1, 2), mpq_class(5, 2)}) == GaussianInt{-1, 2});
  const AdaptiveComplex z(AdaptiveReal::from_decimal("-0.5", 64), AdaptiveReal::from_decimal("2.5", 64));
  CHECK(nearest_gaussian(z) == GaussianInt{-1, 2});
}

TEST_CASE("gaussian integer norms stay exact") {
  const std::int64_t big = std::int64_t{1} << 30;
  CHECK(GaussianInt{big, big}.norm() == (std::int64_t{1} << 61));
  CHECK(GaussianInt{3, -4}.norm() == 25);
}

TEST_CASE("hurwitz map examples") {
  const auto z = sqrt2_minus_1_i(512);
  const auto s = hurwitz_map(z);
  CHECK(s.digit == GaussianInt{0, -2});
  CHECK(s.next.re == 0);
  CHECK(std::abs(mpq_class(s.next.im + z.im).get_d()) < 1e-100);

  const auto t = hurwitz_map(ComplexRational{0, mpq_class(-1, 2)});
  CHECK(t.digit == GaussianInt{0, 2});
  CHECK(t.next.re == 0);
  CHECK(t.next.im == 0);
}

TEST_CASE("domain closure on random inputs") {
  const mpq_class half(1, 2);
  const double tol = 0x1p-50;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const mpq_class x = sample_uniform_unit_rational({21, i}, 128) - half;
    const auto s = nicf_map(x);
    REQUIRE(s.next >= -half);
    REQUIRE(s.next < half);

    const auto sa = nicf_map(AdaptiveReal::from_rational(x, 128));
    REQUIRE(sa.b == s.b);
    REQUIRE(sa.next.to_double() >= -0.5 - tol);
    REQUIRE(sa.next.to_double() < 0.5 + tol);

    const auto z = ComplexSource::uniform_box({22, i}).at(128);
    const auto h = hurwitz_map(z);
    REQUIRE(in_box(h.next));

    const auto za = sample_uniform_box({22, i}, 128);
    const auto ha = hurwitz_map(za);
    REQUIRE(ha.digit == h.digit);
    REQUIRE(std::abs(ha.next.re.to_double()) <= 0.5 + tol);
    REQUIRE(std::abs(ha.next.im.to_double()) <= 0.5 + tol);
  }
}

TEST_CASE("expansions of pi") {
  const auto pi = RealSource::named("pi");
  const auto r = std::get<RcfExpansion>(expand(Family::rcf, pi, 24));
  CHECK(r.a0 == 3);
  CHECK(r.digits == kPiRcf);
  const auto n = std::get<NicfExpansion>(expand(Family::nicf, pi, 23));
  CHECK(n.a0 == 3);
  CHECK(n.b == kPiNicf);
  CHECK(n.eps.size() == n.b.size());
  CHECK_THROWS_AS(expand(Family::hccf, pi, 4), InvalidArgument);
}

TEST_CASE("hccf period-two orbit") {
  const auto src = ComplexSource::from_evaluator(sqrt2_minus_1_i, "(sqrt2-1)i");
  const auto e = refine_and_agree_hccf(src, 6);
  CHECK(e.a0 == GaussianInt{0, 0});
  const GaussianInt m{0, -2}, p{0, 2};
  CHECK(e.digits == std::vector<GaussianInt>{m, p, m, p, m, p});

  const auto t = refine_and_agree_hccf(ComplexSource::exact(0, mpq_class(-1, 2)), 5);
  CHECK(t.status == Status::terminated);
  CHECK(t.digits == std::vector<GaussianInt>{p});

  const auto off = expand_hccf_exact({mpq_class(12, 5), mpq_class(-17, 10)}, 3);
  CHECK(off.a0 == GaussianInt{2, -2});
}

TEST_CASE("digit ranges over a million digits") {
  std::size_t bad = 0, total = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto r = refine_and_agree_rcf(RealSource::uniform({23, i}), 1000);
    for (auto d : r.digits) bad += d < 1;
    const auto n = refine_and_agree_nicf(RealSource::uniform({24, i}).offset(mpq_class(-1, 2)), 1000);
    for (auto b : n.b) bad += b < 2;
    for (auto e : n.eps) bad += e != 1 && e != -1;
    const auto h = refine_and_agree_hccf(ComplexSource::uniform_box({25, i}), 1000);
    for (const auto& g : h.digits) bad += g.norm() < 2;
    total += r.digits.size() + n.b.size() + h.digits.size();
  }
  CHECK(total == 3000000);
  CHECK(bad == 0);
}

TEST_CASE("digit k equals the first digit of the (k-1)-st iterate") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const mpq_class x = sample_uniform_unit_rational({26, i}, 256);
    const auto r = expand_rcf_exact(x, 20);
    GaussEngine ge(x);
    const mpq_class y = x - mpq_class(1, 2);
    const auto n = expand_nicf_exact(y, 20);
    NicfEngine ne(y);
    const auto z = ComplexSource::uniform_box({26, i}).at(256);
    const auto h = expand_hccf_exact(z, 20);
    HurwitzEngine he(z);
    for (std::size_t k = 0; k < 20; ++k) {
      REQUIRE(expand_rcf_exact(ge.value(), 1).digits.at(0) == r.digits[k]);
      REQUIRE(expand_nicf_exact(ne.value(), 1).b.at(0) == n.b[k]);
      REQUIRE(expand_hccf_exact(he.value(), 1).digits.at(0) == h.digits[k]);
      std::int64_t d;
      int eps;
      GaussianInt g;
      REQUIRE(ge.step(d));
      REQUIRE(d == r.digits[k]);
      REQUIRE(ne.step(d, eps));
      REQUIRE(d == n.b[k]);
      REQUIRE(eps == n.eps[k]);
      REQUIRE(he.step(g));
      REQUIRE(g == h.digits[k]);
    }
  }
}

TEST_CASE("nicf signed digits rebuild the input") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const mpq_class x = sample_uniform_unit_rational({27, i}, 64) * 10 - 5;
    const auto e = expand_nicf_exact(x, 10000);
    REQUIRE(e.status == Status::terminated);
    const auto s = e.signed_digits();
    REQUIRE(!s.empty());
    mpq_class y(static_cast<long>(s.back()));
    for (std::size_t k = s.size() - 1; k-- > 0;) y = static_cast<long>(s[k]) + 1 / y;
    REQUIRE(static_cast<long>(e.a0) + 1 / y == x);
  }
}

TEST_CASE("convergents") {
  RcfExpansion e{0, {7, 15, 1}, Status::ongoing};
  const auto c = convergents(e);
  REQUIRE(c.size() >= 3);
  const auto n = c.size();
  CHECK(c[n - 3].value() == mpq_class(1, 7));
  CHECK(c[n - 2].value() == mpq_class(15, 106));
  CHECK(c[n - 1].value() == mpq_class(16, 113));

  CHECK(convergents(RcfExpansion{0, {5}, Status::ongoing}).back().value() == mpq_class(1, 5));
  const HccfExpansion h{{0, 0}, {{0, -2}}, Status::ongoing};
  const auto hv = convergents(h).back().value();
  CHECK(hv.re == 0);
  CHECK(hv.im == mpq_class(1, 2));
  const auto z = sqrt2_minus_1_i(256);
  CHECK(std::abs(mpq_class(z.im - hv.im).get_d()) < 0.09);
  const HccfExpansion h3{{0, 0}, {{1, 1}}, Status::ongoing};
  const auto v3 = convergents(h3).back().value();
  CHECK(v3.re == mpq_class(1, 2));
  CHECK(v3.im == mpq_class(-1, 2));
}

TEST_CASE("reconstruction") {
  const auto pi3 = RealSource::named("pi").offset(-3);
  const auto e = refine_and_agree_rcf(pi3, 20);
  const auto rep = reconstruct_check(pi3.at(1024), e, 1e-15);
  CHECK(rep.ok);
  CHECK(rep.final_error < 1e-15);

  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto src = ComplexSource::uniform_box({28, i});
    const auto h = refine_and_agree_hccf(src, 30);
    CHECK(reconstruct_check(src.at(4096), h, 1e-6).ok);
    const auto nsrc = RealSource::uniform({28, i}).offset(mpq_class(-1, 2));
    const auto n = refine_and_agree_nicf(nsrc, 30);
    CHECK(reconstruct_check(nsrc.at(4096), n, 1e-12).ok);
  }

  const mpq_class q(355, 1013);
  const auto t = expand_rcf_exact(q, 100);
  REQUIRE(t.status == Status::terminated);
  const auto exact = reconstruct_check(q, t, 1e-300);
  CHECK(exact.ok);
  CHECK(exact.final_error == 0.0);
  CHECK(convergents(t).back().value() == q);

  CHECK_THROWS_AS(reconstruct_check(q, RcfExpansion{0, {2, 1}, Status::ongoing}, 1.0), InvalidArgument);
  // Wrong digits make the error stall.
  CHECK_THROWS_AS(reconstruct_check(pi3.at(256), RcfExpansion{0, {7, 15, 1, 3, 1, 1}, Status::ongoing}, 1.0),
                  ReconstructionDivergence);
}

TEST_CASE("naive floor map trap") {
  const ComplexRational a{mpq_class(9, 10), mpq_class(1, 2)};
  const ComplexRational b{mpq_class(3, 4), mpq_class(1, 2)};
  for (const auto& z : {a, b}) {
    REQUIRE(in_trap_region(z));
    const auto rep = naive_complex_trap(z, 100);
    CHECK(rep.iterations == 100);
    CHECK(rep.all_minus_i);
    CHECK(rep.stayed_in_region);
  }
  // The two circles touch at 1/2 + i/2, which is not an interior point.
  CHECK_FALSE(in_trap_region({mpq_class(1, 2), mpq_class(1, 2)}));
  CHECK_THROWS_AS(naive_complex_trap({mpq_class(1, 2), mpq_class(1, 2)}, 10), InvalidArgument);
  CHECK_THROWS_AS(naive_complex_trap({mpq_class(1, 5), mpq_class(1, 5)}, 10), InvalidArgument);

  std::size_t escapes = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto z = sample_trap_region({29, i});
    REQUIRE(in_trap_region(z));
    const auto rep = naive_complex_trap(z, 100);
    escapes += !(rep.stayed_in_region && rep.all_minus_i);
  }
  CHECK(escapes == 0);
}

TEST_CASE("expansion json round trip") {
  const auto pi = RealSource::named("pi");
  const std::vector<Expansion> cases{
      expand(Family::rcf, pi, 12), expand(Family::nicf, pi, 12),
      expand(Family::hccf, ComplexSource::parse("0.3+0.2i"), 40),
      expand(Family::hccf, ComplexSource::uniform_box({30, 1}), 12)};
  for (const auto& e : cases) {
    const auto j = expansion_to_json(e, {"x", 256});
    CHECK(j.at("family") == to_string(family_of(e)));
    CHECK(expansion_from_json(j) == e);
    CHECK(expansion_from_json(nlohmann::json::parse(j.dump())) == e);
  }
  CHECK_THROWS_AS(expansion_from_json(nlohmann::json{{"family", "rcf"}}), InvalidArgument);
}
