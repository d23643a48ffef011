#pragma once

#include "merton/core/types.hpp"

#include <span>
#include <vector>

namespace merton::builder {

/// v_t = int_t^T exp(-mu_rf (tau - t)) y_tau dtau at each grid point, by the
/// trapezoidal rule on the grid itself (so v at the last point is 0). The grid
/// must be nondecreasing and end at T.
std::vector<double> human_capital(const IncomeModel& income, double mu_rf, std::span<const double> grid);

}  // namespace merton::builder
