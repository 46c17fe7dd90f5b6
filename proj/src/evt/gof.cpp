#include "cfevt/evt/gof.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "cfevt/errors.hpp"
#include "cfevt/evt/limits.hpp"

namespace cfevt {

ChiSquareResult chi_square(const std::vector<std::uint64_t>& observed, const std::vector<double>& probs) {
  if (observed.size() != probs.size() || observed.size() < 2) {
    throw InvalidArgument("chi_square needs matching observed/probability vectors of length >= 2");
  }
  std::uint64_t total = 0;
  for (auto o : observed) total += o;
  if (total == 0) throw InvalidArgument("chi_square of an empty histogram");

  ChiSquareResult res;
  res.observed = observed;
  for (double p : probs) res.expected.push_back(p * static_cast<double>(total));
  while (res.expected.size() > 1 && res.expected.back() < 5.0) {
    const std::size_t m = res.expected.size();
    res.expected[m - 2] += res.expected[m - 1];
    res.observed[m - 2] += res.observed[m - 1];
    res.expected.pop_back();
    res.observed.pop_back();
  }
  // Small cells left in the interior merge into the next cell outward.
  for (std::size_t i = res.expected.size(); i-- > 1;) {
    if (res.expected[i - 1] < 5.0) {
      res.expected[i] += res.expected[i - 1];
      res.observed[i] += res.observed[i - 1];
      res.expected.erase(res.expected.begin() + static_cast<std::ptrdiff_t>(i - 1));
      res.observed.erase(res.observed.begin() + static_cast<std::ptrdiff_t>(i - 1));
    }
  }
  // Everything pooled into one cell (e.g. tau near 0): no degrees of freedom,
  // nothing to reject.
  if (res.expected.size() < 2) {
    res.p_value = 1.0;
    return res;
  }
  for (std::size_t i = 0; i < res.expected.size(); ++i) {
    const double d = static_cast<double>(res.observed[i]) - res.expected[i];
    res.statistic += d * d / res.expected[i];
  }
  res.dof = res.expected.size() - 1;
  res.p_value = boost::math::gamma_q(static_cast<double>(res.dof) / 2.0, res.statistic / 2.0);
  return res;
}

ChiSquareResult chi_square_poisson(const std::vector<std::uint64_t>& observed, double tau) {
  if (observed.size() < 2) throw InvalidArgument("need at least two cells");
  std::vector<double> probs;
  double head = 0;
  for (std::size_t j = 0; j + 1 < observed.size(); ++j) {
    probs.push_back(poisson_pmf(tau, j));
    head += probs.back();
  }
  probs.push_back(std::max(0.0, 1.0 - head));
  return chi_square(observed, probs);
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw InvalidArgument("KS statistic of an empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

}  // namespace cfevt
