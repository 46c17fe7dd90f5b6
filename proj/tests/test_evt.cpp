#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "cfevt/cf/expansion.hpp"
#include "cfevt/errors.hpp"
#include "cfevt/evt/experiments.hpp"
#include "cfevt/evt/gof.hpp"
#include "cfevt/evt/limits.hpp"
#include "cfevt/evt/order_stats.hpp"
#include "cfevt/evt/rate.hpp"
#include "cfevt/evt/scaling_family.hpp"
#include "cfevt/measures/exact_measures.hpp"

using namespace cfevt;

TEST_CASE("exceedances and maxima by inspection") {
  const std::vector<double> d{7, 16, 294, 3};
  CHECK(count_exceedances(d, 10) == 2);
  CHECK(count_exceedances(d, 0) == 4);
  CHECK(count_exceedances(d, 294) == 0);
  const auto m = maxima(d, 2);
  CHECK(m.max() == 294);
  CHECK(m.kth(2) == 16);
  CHECK(maxima(d, 4).kth(4) == 3);
  CHECK_THROWS_AS(maxima(d, 0), InvalidArgument);
  CHECK_THROWS_AS(maxima(d, 5), InvalidArgument);

  ExceedanceTable t{4, 10, 1, {2}};
  const std::vector<MaximaSample> ms{m};
  CHECK(kth_max_duality_check(t, ms, 2));
  CHECK(kth_max_duality_check(t, ms, 1));
  ExceedanceTable bad{4, 10, 1, {0}};
  CHECK_THROWS_AS(kth_max_duality_check(bad, ms, 1), DualityViolation);
}

TEST_CASE("streaming maxima equal the full-sort oracle") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int s = 0; s < 1000; ++s) {
    std::vector<double> x(1000);
    for (auto& v : x) v = std::floor(1.0 / u(rng));
    TopK top(16);
    for (double v : x) top.push(v);
    std::vector<double> sorted = x;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    sorted.resize(16);
    REQUIRE(top.sample().top == sorted);
    REQUIRE(maxima(x, 16).top == sorted);
    REQUIRE(top.seen() == 1000);
    const double v = sorted[5];
    const auto naive = static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [&](double y) { return y > v; }));
    REQUIRE(count_exceedances(x, v) == naive);
  }
}

TEST_CASE("frechet limits") {
  CHECK(frechet_limit(Family::hccf, 1.0, 1) == doctest::Approx(0.36787944117144233).epsilon(1e-15));
  CHECK(frechet_limit(Family::nicf, 1.0, 2) == doctest::Approx(0.7357588823428847).epsilon(1e-15));
  CHECK(frechet_limit(Family::rcf, 2.0, 1) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(frechet_limit(Family::rcf, 1e9, 1) == doctest::Approx(1.0));
  CHECK(frechet_limit(make_scaling(Family::hccf, 2.0), 2.0, 1) == doctest::Approx(std::exp(-0.25)));
}

TEST_CASE("poisson pmf") {
  CHECK(poisson_pmf(1.0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(poisson_pmf(0.0, 0) == 1.0);
  CHECK(poisson_pmf(0.0, 3) == 0.0);
  CHECK(poisson_pmf(1.0, 2) == doctest::Approx(std::exp(-1.0) / 2).epsilon(1e-15));
  for (double tau : {0.1, 1.0, 10.0}) {
    double s = 0;
    for (std::size_t j = 0; j < 200; ++j) s += poisson_pmf(tau, j);
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("scaling families") {
  const auto r = make_scaling(Family::rcf);
  const auto n = make_scaling(Family::nicf);
  CHECK(r.u(1000, 1.0) == doctest::Approx(1000 / std::log(2.0)));
  CHECK(n.u(1000, 2.0) == doctest::Approx(2000 / std::log(kGolden)));
  CHECK(n.tau(2.0) == 0.5);
  const auto h = make_scaling(Family::hccf, 1.5);
  CHECK(h.u(100, 2.0) == doctest::Approx(30.0));
  CHECK(h.tau(2.0) == 0.25);
  CHECK(h.u(101, 2.0) > h.u(100, 2.0));
  CHECK(h.u(100, 2.1) > h.u(100, 2.0));
  CHECK_THROWS_AS(make_scaling(Family::hccf), MissingConstants);
}

TEST_CASE("chi-square") {
  const auto c = chi_square({10, 20, 30}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(c.statistic == doctest::Approx(10.0));
  CHECK(c.dof == 2);
  CHECK(c.p_value == doctest::Approx(std::exp(-5.0)).epsilon(1e-12));
  const auto d = chi_square({30, 30, 40}, {0.25, 0.25, 0.5});
  CHECK(d.statistic == doctest::Approx(4.0));
  CHECK(d.p_value == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  const auto one = chi_square({1000, 0}, {1.0 - 1e-9, 1e-9});
  CHECK(one.dof == 0);
  CHECK(one.p_value == 1.0);
  // Expected counts 90, 9.9, 0.1: the last cell pools into the middle one.
  const auto p = chi_square({90, 9, 1}, {0.9, 0.099, 0.001});
  CHECK(p.observed == std::vector<std::uint64_t>{90, 10});
  CHECK(p.dof == 1);
  const auto q = chi_square_poisson({368, 368, 184, 80}, 1.0);
  REQUIRE(q.expected.size() == 4);
  CHECK(q.expected[0] == doctest::Approx(1000 * std::exp(-1.0)));
  CHECK(q.expected[3] == doctest::Approx(1000 * (1 - 2.5 * std::exp(-1.0))));
  CHECK(q.p_value > 0.5);
}

TEST_CASE("ks statistic") {
  const auto cdf = [](double x) { return x; };
  CHECK(ks_statistic({0.5}, cdf) == doctest::Approx(0.5));
  CHECK(ks_statistic({0.125, 0.375, 0.625, 0.875}, cdf) == doctest::Approx(0.125));
  CHECK(ks_critical_1pct(10000) == doctest::Approx(0.016276));
}

TEST_CASE("l solver") {
  CHECK(std::abs(l_solver(100) - 8.548905676681126) < 1e-9);
  CHECK(std::abs(l_solver(2) - 1.354548180653259) < 1e-9);
  CHECK(std::abs(l_solver(8192) - 20.776691263156738) < 1e-9);
  CHECK(std::abs(l_solver(1e6) - 35.6053302770466) < 1e-9);
  double prev = 0, prev_gap = 0;
  const double limit = std::log(2.0) / std::log(4.0 / 3.0);
  for (double n = 4; n <= 1e15; n *= 10) {
    const double l = l_solver(n);
    CHECK(std::abs(l - n * std::pow(0.75, l)) < 1e-9);
    CHECK(l > prev);
    const double gap = l_solver(2 * n) - l;
    CHECK(gap > prev_gap);
    CHECK(gap < limit);
    prev = l;
    prev_gap = gap;
  }
  CHECK(limit - prev_gap < 0.1);
  CHECK_THROWS_AS(l_solver(1), InvalidArgument);
  CHECK_THROWS_AS(l_solver(100, 1.0), InvalidArgument);
}

TEST_CASE("majority trend") {
  CHECK(majority_nonincreasing({3, 2, 1}));
  CHECK_FALSE(majority_nonincreasing({1, 2, 3}));
  CHECK(majority_nonincreasing({0.02, 0.01, 0.015}));
  CHECK_FALSE(majority_nonincreasing({0.01, 0.02, 0.015}));
}

TEST_CASE("duality on nicf digits") {
  const auto s = make_scaling(Family::nicf);
  std::size_t violations = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto e = refine_and_agree_nicf(RealSource::uniform({42, i}).offset(mpq_class(-1, 2)), 64);
    const std::vector<double> m(e.b.begin(), e.b.end());
    const auto top = maxima(m, 3);
    const std::vector<MaximaSample> one{top};
    for (double r : {0.25, 0.5, 1.0, 2.0}) {
      const ExceedanceTable t{64, s.u(64, r), r, {count_exceedances(m, s.u(64, r))}};
      for (std::size_t k = 1; k <= 3; ++k) {
        try {
          kth_max_duality_check(t, one, k);
        } catch (const DualityViolation&) {
          ++violations;
        }
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("digit batches") {
  BatchConfig cfg;
  cfg.family = Family::rcf;
  cfg.n = 200;
  cfg.checkpoints = {50, 100};
  cfg.samples = 300;
  cfg.seed = 43;
  cfg.workers = 1;
  const auto a = generate_batch(cfg);
  cfg.workers = 3;
  const auto b = generate_batch(cfg);
  REQUIRE(a.lengths == std::vector<std::size_t>{50, 100, 200});
  REQUIRE(a.samples() == 300);
  for (std::size_t l = 0; l < 3; ++l) {
    for (std::size_t i = 0; i < 300; ++i) REQUIRE(a.top[l][i].top == b.top[l][i].top);
  }
  for (std::size_t i = 0; i < 300; i += 37) {
    const auto e = refine_and_agree_rcf(RealSource::uniform({43, i}), 200);
    const std::vector<double> m(e.digits.begin(), e.digits.end());
    CHECK(a.at(100)[i].top == maxima(std::span<const double>(m).first(100), 16).top);
    CHECK(a.at(200)[i].top == maxima(m, 16).top);
  }
  CHECK_THROWS_AS(a.at(75), InvalidArgument);
}

TEST_CASE("evl and poisson experiments on small runs") {
  const auto rep = run_evl_experiment(Family::rcf, 64, 2000, {0.25, 0.5, 1, 2, 4}, 1, 44);
  REQUIRE(rep.rows.size() == 5);
  for (std::size_t i = 1; i < rep.rows.size(); ++i) CHECK(rep.rows[i].empirical >= rep.rows[i - 1].empirical);
  for (const auto& row : rep.rows) {
    CHECK(row.limit == doctest::Approx(std::exp(-1 / row.r)));
    CHECK(row.se > 0);
  }
  const auto k2 = run_evl_experiment(Family::nicf, 64, 2000, {1}, 2, 44);
  CHECK(k2.rows.at(0).limit == doctest::Approx(2 * std::exp(-1.0)));

  const auto big = run_poisson_experiment(Family::nicf, 64, 1000, 1e6, 4, 45);
  CHECK(big.observed.at(0) == 1000);
  CHECK(big.frac_no_exceedance == 1.0);
  CHECK(big.frac_max_below == 1.0);

  const auto p = run_poisson_experiment(Family::nicf, 128, 1000, 1.0, 4, 46);
  std::uint64_t total = 0;
  for (auto o : p.observed) total += o;
  CHECK(total == 1000);
  CHECK(p.frac_no_exceedance == p.frac_max_below);
  CHECK(p.chi.p_value >= 0.0);

  CHECK_THROWS_AS(run_evl_experiment(Family::hccf, 64, 1000, {1}, 1, 47), MissingConstants);
  CHECK_THROWS_AS(run_evl_experiment(Family::rcf, 64, 999, {1}, 1, 47), InvalidArgument);
}

TEST_CASE("rate curve") {
  BatchConfig cfg;
  cfg.family = Family::nicf;
  cfg.n = 256;
  cfg.checkpoints = {64, 128};
  cfg.samples = 1000;
  cfg.seed = 48;
  const auto batch = generate_batch(cfg);
  const auto rows = rate_curve(batch, make_scaling(Family::nicf), 1.0);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.l_n == doctest::Approx(l_solver(static_cast<double>(r.n))));
    CHECK(r.envelope == doctest::Approx(r.l_n / r.n));
    CHECK(r.deviation == doctest::Approx(std::abs(r.empirical - r.limit)));
  }
}
