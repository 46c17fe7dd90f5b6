#include "cfevt/measures/density.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

std::size_t cell_of(double t, std::size_t r) {
  const double c = std::floor((t + 0.5) * static_cast<double>(r));
  if (c < 0) return 0;
  return std::min(static_cast<std::size_t>(c), r - 1);
}

}  // namespace

DensityGrid::DensityGrid(std::size_t resolution) : resolution_(resolution) {
  if (resolution == 0 || resolution % 2 != 0) {
    throw InvalidArgument("grid resolution must be a positive even number");
  }
  counts_.assign(resolution * resolution, 0);
}

void DensityGrid::add(std::complex<double> z) {
  ++counts_[cell_of(z.imag(), resolution_) * resolution_ + cell_of(z.real(), resolution_)];
  ++total_;
}

void DensityGrid::add(std::span<const std::complex<double>> zs) {
  for (const auto& z : zs) add(z);
}

void DensityGrid::merge(const DensityGrid& other) {
  if (other.resolution_ != resolution_) throw InvalidArgument("grid resolutions differ");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

double DensityGrid::density(std::size_t row, std::size_t col) const {
  if (total_ == 0) return 0.0;
  const double cell_area = 1.0 / static_cast<double>(resolution_ * resolution_);
  return static_cast<double>(count(row, col)) / (static_cast<double>(total_) * cell_area);
}

std::uint64_t DensityGrid::min_count() const { return *std::min_element(counts_.begin(), counts_.end()); }

std::string DensityGrid::to_csv() const {
  std::ostringstream out;
  out << "row,col,count\n";
  for (std::size_t r = 0; r < resolution_; ++r) {
    for (std::size_t c = 0; c < resolution_; ++c) out << r << ',' << c << ',' << count(r, c) << '\n';
  }
  return out.str();
}

nlohmann::json DensityGrid::header_json(std::uint64_t seed, std::size_t burn_in) const {
  return {{"schema_version", 1}, {"resolution", resolution_}, {"total", total_}, {"seed", seed}, {"burn_in", burn_in}};
}

double symmetry_defect(const DensityGrid& g) {
  const std::size_t R = g.resolution();
  if (g.total() == 0) throw InvalidArgument("symmetry defect of an empty grid");
  const double total = static_cast<double>(g.total());
  double defect = 0.0;
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < R; ++c) {
      // Images of cell (row r, col c) = point x + iy under the dihedral group:
      // z, i z, -z, -i z and their conjugates. Negating a coordinate maps
      // index k to R - 1 - k.
      const std::size_t rr = R - 1 - r, cc = R - 1 - c;
      const std::array<std::uint64_t, 8> images = {
          g.count(r, c),  g.count(c, rr), g.count(rr, cc), g.count(cc, r),
          g.count(rr, c), g.count(cc, rr), g.count(r, cc), g.count(c, r),
      };
      double mean = 0.0;
      for (auto v : images) mean += static_cast<double>(v);
      mean /= 8.0;
      defect += std::abs(static_cast<double>(g.count(r, c)) - mean);
    }
  }
  return defect / total;
}

double l1_distance(const DensityGrid& a, const DensityGrid& b) {
  if (a.resolution() != b.resolution()) throw InvalidArgument("grid resolutions differ");
  if (a.total() == 0 || b.total() == 0) throw InvalidArgument("L1 distance of an empty grid");
  double d = 0.0;
  for (std::size_t i = 0; i < a.counts().size(); ++i) {
    d += std::abs(static_cast<double>(a.counts()[i]) / static_cast<double>(a.total()) -
                  static_cast<double>(b.counts()[i]) / static_cast<double>(b.total()));
  }
  return d;
}

}  // namespace cfevt
