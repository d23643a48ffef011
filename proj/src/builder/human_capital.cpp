#include "merton/builder/human_capital.hpp"

#include <cmath>

namespace merton::builder {

std::vector<double> human_capital(const IncomeModel& income, double mu_rf, std::span<const double> grid) {
    std::vector<double> v(grid.size(), 0.0);
    for (std::size_t i = grid.size() - 1; i-- > 0;) {
        const double h = grid[i + 1] - grid[i];
        const double disc = std::exp(-mu_rf * h);
        v[i] = disc * v[i + 1] + 0.5 * h * (income.rate(grid[i]) + disc * income.rate(grid[i + 1]));
    }
    return v;
}

}  // namespace merton::builder
