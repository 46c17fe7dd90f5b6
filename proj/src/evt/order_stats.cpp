#include "cfevt/evt/order_stats.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cfevt/errors.hpp"

namespace cfevt {

std::size_t count_exceedances(std::span<const double> moduli, double v) {
  return static_cast<std::size_t>(std::count_if(moduli.begin(), moduli.end(), [v](double x) { return x > v; }));
}

TopK::TopK(std::size_t k) : k_(k) {
  if (k == 0) throw InvalidArgument("k must be >= 1");
  top_.reserve(k);
}

void TopK::push(double x) {
  ++seen_;
  if (top_.size() == k_) {
    if (!(x > top_.back())) return;
    top_.pop_back();
  }
  top_.insert(std::upper_bound(top_.begin(), top_.end(), x, std::greater<>()), x);
}

MaximaSample maxima(std::span<const double> moduli, std::size_t k) {
  if (k == 0 || k > moduli.size()) throw InvalidArgument("maxima needs 1 <= k <= n");
  TopK t(k);
  for (double x : moduli) t.push(x);
  return t.sample();
}

bool kth_max_duality_check(const ExceedanceTable& table, std::span<const MaximaSample> maxima,
                           std::size_t k) {
  if (table.counts.size() != maxima.size()) throw InvalidArgument("table and maxima differ in size");
  for (std::size_t s = 0; s < maxima.size(); ++s) {
    const auto& top = maxima[s].top;
    const std::size_t kept = top.size();
    if (k > kept) throw InvalidArgument("k exceeds the stored order statistics");
    const std::size_t S = std::min(table.counts[s], kept);
    for (std::size_t kk = 1; kk <= k; ++kk) {
      const bool lhs = top[kk - 1] <= table.v;
      const bool rhs = S <= kk - 1;
      if (lhs != rhs) {
        throw DualityViolation("sample " + std::to_string(s) + ", k = " + std::to_string(kk) +
                               ": M^(k) <= v is " + (lhs ? "true" : "false") +
                               " but S_n(v) = " + std::to_string(table.counts[s]));
      }
    }
  }
  return true;
}

}  // namespace cfevt
