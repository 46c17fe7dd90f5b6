#pragma once

// Exceedance counts and top order statistics of digit-modulus sequences.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cfevt {

/// S_n(v) = #{i : x_i > v}.
std::size_t count_exceedances(std::span<const double> moduli, double v);

/// The k largest values of a sequence, largest first: M^(1) >= ... >= M^(k).
struct MaximaSample {
  std::vector<double> top;

  double max() const { return top.front(); }
  /// M^(k), 1-based.
  double kth(std::size_t k) const { return top.at(k - 1); }
};

/// Single pass keeping the running top k. Requires 1 <= k <= size.
MaximaSample maxima(std::span<const double> moduli, std::size_t k);

/// Streaming form of maxima(): feed values one at a time.
class TopK {
 public:
  explicit TopK(std::size_t k);
  void push(double x);
  std::size_t seen() const { return seen_; }
  MaximaSample sample() const { return {top_}; }

 private:
  std::size_t k_;
  std::size_t seen_ = 0;
  std::vector<double> top_;  // descending
};

/// Exceedance counts of a batch of samples at one threshold.
struct ExceedanceTable {
  std::size_t n = 0;
  double v = 0;
  double r = 0;
  std::vector<std::size_t> counts;  // S_n per sample
};

/// Checks M^(k) <= v  <=>  S_n(v) <= k - 1 for every sample and every k up
/// to `k`. When a sample keeps only its top K values, S_n is known exactly up
/// to K; counts are compared after capping at K. Throws DualityViolation on
/// the first mismatch and InvalidArgument when the inputs disagree in size.
bool kth_max_duality_check(const ExceedanceTable& table, std::span<const MaximaSample> maxima,
                           std::size_t k);

}  // namespace cfevt
