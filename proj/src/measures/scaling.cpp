#include "cfevt/measures/scaling.hpp"

#include "cfevt/errors.hpp"
#include "cfevt/evt/scaling_family.hpp"
#include "cfevt/measures/exact_measures.hpp"

namespace cfevt {

std::vector<ScalingRow> scaling_check(Family family, double r, const std::vector<std::size_t>& n_grid,
                                      const CuspConstants* constants, const EmpiricalTail* tail) {
  if (!(r > 0)) throw InvalidArgument("r must be positive");
  std::optional<double> C;
  if (family == Family::hccf) {
    if (!constants) throw MissingConstants("HCCF scaling needs cusp constants");
    if (!tail) throw MissingConstants("HCCF scaling needs an empirical tail");
    C = constants->C().value;
  }
  const ScalingFamily sf = make_scaling(family, C);
  std::vector<ScalingRow> rows;
  for (std::size_t n : n_grid) {
    ScalingRow row;
    row.n = n;
    row.u = sf.u(n, r);
    double t = 0;
    switch (family) {
      case Family::rcf: t = gauss_digit_tail(row.u); break;
      case Family::nicf: t = nicf_digit_tail(row.u); break;
      case Family::hccf: t = tail->tail(row.u); break;
    }
    row.n_tail = static_cast<double>(n) * t;
    row.tau = sf.tau(r);
    row.deviation = row.n_tail - row.tau;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cfevt
