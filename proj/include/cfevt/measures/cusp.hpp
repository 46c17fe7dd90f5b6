#pragma once

// Estimates of the limits of the Hurwitz invariant density at 0 and of the
// first-digit tail mu{|a_1| > j}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "cfevt/measures/hurwitz_sampling.hpp"

namespace cfevt {

struct EstimateSE {
  double value = 0;
  double se = 0;
};

struct CuspConstants {
  EstimateSE C_tilde;  // density limit through the bulk regions A1..A4
  EstimateSE C_prime;  // density limit through the slivers A5..A8
  std::vector<double> j_grid;
  std::uint64_t samples = 0;

  std::array<EstimateSE, 4> bulk_by_region{};    // A1..A4
  std::array<EstimateSE, 4> sliver_by_region{};  // A5..A8
  std::vector<double> bulk_by_j;                 // C_tilde at each j
  std::vector<double> sliver_by_j;
  /// max/min of bulk_by_j.
  double plateau_ratio = 0;

  /// pi * C_tilde
  EstimateSE H() const;
  /// sqrt(H)
  EstimateSE C() const;
};

nlohmann::json to_json(const CuspConstants& c);
/// Reads the estimates and j_grid back; per-region data is optional.
CuspConstants cusp_constants_from_json(const nlohmann::json& j);

/// Empirical law of |a_1| for mu-distributed points: the total count and the
/// sorted moduli above a floor, enough to evaluate the tail at any j >= floor.
class EmpiricalTail {
 public:
  explicit EmpiricalTail(double floor = 0) : floor_(floor) {}

  void add(double modulus);
  void finalize();
  std::uint64_t total() const { return total_; }
  double floor() const { return floor_; }
  /// Fraction of samples with modulus > j. Requires j >= floor and finalize().
  double tail(double j) const;
  std::uint64_t count_above(double j) const;

 private:
  double floor_;
  std::uint64_t total_ = 0;
  std::vector<double> above_;
  bool sorted_ = true;
};

/// Streams samples and keeps, for each j in j_grid, counts of the points of
/// D(j) per region, together with an EmpiricalTail.
class CuspAccumulator {
 public:
  CuspAccumulator(std::vector<double> j_grid, double tail_floor);

  void add(std::span<const StationarySample> samples);
  std::uint64_t total() const { return total_; }
  const std::vector<double>& j_grid() const { return j_grid_; }
  /// Count of samples in region `region` (1..12) with |z| <= 1/j_grid[k].
  std::uint64_t sector_count(std::size_t k, int region) const { return counts_[k][region]; }
  EmpiricalTail& tail() { return tail_; }
  const EmpiricalTail& tail() const { return tail_; }

 private:
  std::vector<double> j_grid_;
  std::vector<std::array<std::uint64_t, 13>> counts_;
  EmpiricalTail tail_;
  std::uint64_t total_ = 0;
};

/// Sector estimates from an accumulator. Requires >= 3 grid values, all >= 3.
/// Throws InsufficientMass when any bulk or sliver sector holds fewer than
/// 100 samples.
CuspConstants estimate_cusp_constants(const CuspAccumulator& acc);
CuspConstants estimate_cusp_constants(std::span<const StationarySample> samples,
                                      const std::vector<double>& j_grid);

inline constexpr std::uint64_t kMinSectorCount = 100;

}  // namespace cfevt
