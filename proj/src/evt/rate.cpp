#include "cfevt/evt/rate.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/tools/roots.hpp>

#include "cfevt/errors.hpp"
#include "cfevt/evt/limits.hpp"

namespace cfevt {

double l_solver(double n, double theta) {
  if (!(n >= 2)) throw InvalidArgument("l_solver needs n >= 2");
  if (!(theta > 0 && theta < 1)) throw InvalidArgument("l_solver needs 0 < theta < 1");
  // f is increasing, f(0) = -n < 0 and f(n) = n (1 - theta^n) > 0.
  const auto f = [&](double l) { return l - n * std::pow(theta, l); };
  const auto tol = [](double a, double b) { return std::abs(b - a) < 1e-13; };
  const auto [lo, hi] = boost::math::tools::bisect(f, 0.0, n, tol);
  const double l = 0.5 * (lo + hi);
  if (std::abs(f(l)) >= 1e-9) throw PrecisionExhausted("l_solver did not reach residual 1e-9");
  return l;
}

std::vector<RateRow> rate_curve(const DigitBatch& batch, const ScalingFamily& scaling, double r,
                                double theta) {
  std::vector<RateRow> rows;
  for (std::size_t n : batch.lengths) {
    const auto rep = run_evl_experiment(batch.at(n), n, scaling, {r}, 1);
    RateRow row;
    row.n = n;
    row.empirical = rep.rows[0].empirical;
    row.limit = rep.rows[0].limit;
    row.deviation = std::abs(rep.rows[0].deviation);
    row.l_n = l_solver(static_cast<double>(n), theta);
    row.envelope = row.l_n / (static_cast<double>(n) * std::min(r, r * r));
    rows.push_back(row);
  }
  return rows;
}

bool majority_nonincreasing(const std::vector<double>& d) {
  std::size_t good = 0, pairs = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      ++pairs;
      good += d[j] <= d[i];
    }
  }
  return pairs == 0 || 2 * good >= pairs;
}

}  // namespace cfevt
