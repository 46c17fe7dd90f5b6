#pragma once

// Square histograms over B and their symmetry defect.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace cfevt {

class DensityGrid {
 public:
  explicit DensityGrid(std::size_t resolution = 64);

  std::size_t resolution() const { return resolution_; }
  std::uint64_t total() const { return total_; }
  /// Row indexes the imaginary part, column the real part, both from -1/2.
  std::uint64_t count(std::size_t row, std::size_t col) const { return counts_[row * resolution_ + col]; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  void add(std::complex<double> z);
  void add(std::span<const std::complex<double>> zs);
  /// Requires equal resolution.
  void merge(const DensityGrid& other);

  /// count / (total * cell area)
  double density(std::size_t row, std::size_t col) const;
  std::uint64_t min_count() const;

  /// "row,col,count" with a header line.
  std::string to_csv() const;
  nlohmann::json header_json(std::uint64_t seed, std::size_t burn_in) const;

 private:
  std::size_t resolution_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// L1 distance between the normalized grid and its average over the eight
/// maps generated by conjugation and multiplication by i. Cell c on an axis
/// pairs with R - 1 - c. Ranges over [0, 2).
double symmetry_defect(const DensityGrid& g);

/// L1 distance between two normalized grids of equal resolution.
double l1_distance(const DensityGrid& a, const DensityGrid& b);

}  // namespace cfevt
