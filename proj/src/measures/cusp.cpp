#include "cfevt/measures/cusp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "cfevt/errors.hpp"
#include "cfevt/measures/geometry.hpp"
#include "cfevt/measures/regions.hpp"

namespace cfevt {
namespace {

constexpr double kPi = boost::math::constants::pi<double>();

nlohmann::json se_json(const EstimateSE& e) { return {{"value", e.value}, {"se", e.se}}; }
EstimateSE se_from(const nlohmann::json& j) { return {j.at("value").get<double>(), j.at("se").get<double>()}; }

// Density over a sector: mass / area, with a binomial standard error.
EstimateSE sector_density(std::uint64_t count, std::uint64_t total, double area) {
  const double n = static_cast<double>(total);
  const double p = static_cast<double>(count) / n;
  return {p / area, std::sqrt(p * (1.0 - p) / n) / area};
}

// Averages over j. The per-j estimates come from nested disks and are
// positively correlated, so the mean of their standard errors is used as a
// conservative standard error of the average.
EstimateSE average(const std::vector<EstimateSE>& xs) {
  EstimateSE out;
  for (const auto& x : xs) {
    out.value += x.value;
    out.se += x.se;
  }
  out.value /= static_cast<double>(xs.size());
  out.se /= static_cast<double>(xs.size());
  return out;
}

}  // namespace

EstimateSE CuspConstants::H() const { return {kPi * C_tilde.value, kPi * C_tilde.se}; }

EstimateSE CuspConstants::C() const {
  const EstimateSE h = H();
  const double c = std::sqrt(h.value);
  return {c, c > 0 ? h.se / (2.0 * c) : 0.0};
}

nlohmann::json to_json(const CuspConstants& c) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["C_tilde"] = se_json(c.C_tilde);
  j["C_prime"] = se_json(c.C_prime);
  j["H"] = se_json(c.H());
  j["C"] = se_json(c.C());
  j["j_grid"] = c.j_grid;
  j["samples"] = c.samples;
  j["plateau_ratio"] = c.plateau_ratio;
  j["bulk_by_j"] = c.bulk_by_j;
  j["sliver_by_j"] = c.sliver_by_j;
  auto bulk = nlohmann::json::array(), sliver = nlohmann::json::array();
  for (const auto& e : c.bulk_by_region) bulk.push_back(se_json(e));
  for (const auto& e : c.sliver_by_region) sliver.push_back(se_json(e));
  j["bulk_by_region"] = bulk;
  j["sliver_by_region"] = sliver;
  return j;
}

CuspConstants cusp_constants_from_json(const nlohmann::json& j) {
  try {
    CuspConstants c;
    c.C_tilde = se_from(j.at("C_tilde"));
    c.C_prime = se_from(j.at("C_prime"));
    c.j_grid = j.at("j_grid").get<std::vector<double>>();
    c.samples = j.value("samples", std::uint64_t{0});
    c.plateau_ratio = j.value("plateau_ratio", 0.0);
    c.bulk_by_j = j.value("bulk_by_j", std::vector<double>{});
    c.sliver_by_j = j.value("sliver_by_j", std::vector<double>{});
    if (j.contains("bulk_by_region")) {
      for (std::size_t k = 0; k < 4; ++k) c.bulk_by_region[k] = se_from(j["bulk_by_region"].at(k));
    }
    if (j.contains("sliver_by_region")) {
      for (std::size_t k = 0; k < 4; ++k) c.sliver_by_region[k] = se_from(j["sliver_by_region"].at(k));
    }
    if (!(c.C_tilde.value > 0) || !(c.C_prime.value > 0)) {
      throw InvalidArgument("cusp constants must be positive");
    }
    return c;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed cusp constants JSON: ") + ex.what());
  }
}

void EmpiricalTail::add(double modulus) {
  ++total_;
  if (modulus > floor_) {
    if (!above_.empty() && modulus < above_.back()) sorted_ = false;
    above_.push_back(modulus);
  }
}

void EmpiricalTail::finalize() {
  if (!sorted_) std::sort(above_.begin(), above_.end());
  sorted_ = true;
}

std::uint64_t EmpiricalTail::count_above(double j) const {
  if (j < floor_) throw InvalidArgument("tail threshold below the stored floor");
  if (!sorted_) throw InvalidArgument("EmpiricalTail::finalize() was not called");
  return static_cast<std::uint64_t>(above_.end() - std::upper_bound(above_.begin(), above_.end(), j));
}

double EmpiricalTail::tail(double j) const {
  if (total_ == 0) throw InsufficientMass("empty tail sample");
  return static_cast<double>(count_above(j)) / static_cast<double>(total_);
}

CuspAccumulator::CuspAccumulator(std::vector<double> j_grid, double tail_floor)
    : j_grid_(std::move(j_grid)), counts_(j_grid_.size()), tail_(tail_floor) {
  std::sort(j_grid_.begin(), j_grid_.end());
  for (double j : j_grid_) {
    if (!(j >= 3)) throw InvalidArgument("cusp j_grid values must be >= 3");
  }
  for (auto& c : counts_) c.fill(0);
}

void CuspAccumulator::add(std::span<const StationarySample> samples) {
  // Smallest j has the largest disk.
  const double r0 = j_grid_.empty() ? 0.0 : 1.0 / j_grid_.front();
  for (const auto& s : samples) {
    ++total_;
    tail_.add(s.a1.modulus());
    const double r2 = std::norm(s.z);
    if (r2 > r0 * r0) continue;
    const auto tag = static_cast<std::size_t>(region_classify(s.z).index);
    for (std::size_t k = 0; k < j_grid_.size(); ++k) {
      const double r = 1.0 / j_grid_[k];
      if (r2 <= r * r) ++counts_[k][tag];
    }
  }
}

CuspConstants estimate_cusp_constants(const CuspAccumulator& acc) {
  const auto& grid = acc.j_grid();
  if (grid.size() < 3) throw InvalidArgument("estimate_cusp_constants needs at least 3 j values");
  const std::uint64_t total = acc.total();
  if (total == 0) throw InsufficientMass("no samples");

  CuspConstants out;
  out.j_grid = grid;
  out.samples = total;
  std::vector<EstimateSE> bulk_j, sliver_j;
  std::array<std::vector<EstimateSE>, 4> bulk_r, sliver_r;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double bulk_area = bulk_sector_area(grid[k]);
    const double sliver_area = sliver_sector_area(grid[k]);
    std::uint64_t bulk_sum = 0, sliver_sum = 0;
    for (int q = 0; q < 4; ++q) {
      const std::uint64_t nb = acc.sector_count(k, 1 + q);
      const std::uint64_t ns = acc.sector_count(k, 5 + q);
      if (nb < kMinSectorCount || ns < kMinSectorCount) {
        throw InsufficientMass("sector of D(" + std::to_string(grid[k]) + ") holds " +
                               std::to_string(std::min(nb, ns)) + " samples, fewer than 100");
      }
      bulk_r[q].push_back(sector_density(nb, total, bulk_area));
      sliver_r[q].push_back(sector_density(ns, total, sliver_area));
      bulk_sum += nb;
      sliver_sum += ns;
    }
    bulk_j.push_back(sector_density(bulk_sum, total, 4.0 * bulk_area));
    sliver_j.push_back(sector_density(sliver_sum, total, 4.0 * sliver_area));
  }
  out.C_tilde = average(bulk_j);
  out.C_prime = average(sliver_j);
  for (int q = 0; q < 4; ++q) {
    out.bulk_by_region[q] = average(bulk_r[q]);
    out.sliver_by_region[q] = average(sliver_r[q]);
  }
  for (const auto& e : bulk_j) out.bulk_by_j.push_back(e.value);
  for (const auto& e : sliver_j) out.sliver_by_j.push_back(e.value);
  const auto [lo, hi] = std::minmax_element(out.bulk_by_j.begin(), out.bulk_by_j.end());
  out.plateau_ratio = *hi / *lo;
  return out;
}

CuspConstants estimate_cusp_constants(std::span<const StationarySample> samples,
                                      const std::vector<double>& j_grid) {
  CuspAccumulator acc(j_grid, 0.0);
  acc.add(samples);
  return estimate_cusp_constants(acc);
}

}  // namespace cfevt
