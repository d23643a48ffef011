#include "merton/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace merton {

namespace {

double interpolate(const std::vector<double>& t, const std::vector<double>& v, double x) {
    if (t.empty()) throw std::logic_error("interpolate: empty curve");
    if (x <= t.front()) {
        // right-continuous: a jump located at t.front() takes effect there
        const auto last_at_front = std::upper_bound(t.begin(), t.end(), t.front()) - t.begin() - 1;
        return x < t.front() ? v.front() : v[static_cast<std::size_t>(last_at_front)];
    }
    if (x >= t.back()) return v.back();
    const auto hi = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), x) - t.begin());
    const std::size_t lo = hi - 1;
    const double w = (x - t[lo]) / (t[hi] - t[lo]);
    return v[lo] + w * (v[hi] - v[lo]);
}

}  // namespace

double SampledCurve::operator()(double x) const { return interpolate(t, v, x); }

Matrix MarketModel::dense_covariance() const {
    if (const auto* d = std::get_if<DenseCovariance>(&cov)) return d->sigma;
    const auto& f = std::get<FactorCovariance>(cov);
    Matrix s = f.loadings * f.factor_cov * f.loadings.transpose();
    s.diagonal() += f.idio_var;
    return s;
}

ConstraintSet ConstraintSet::budget(int n) {
    ConstraintSet s;
    s.eq.push_back({Vector::Ones(n), 1.0});
    return s;
}

bool ConstraintSet::has_budget(int n) const {
    return std::any_of(eq.begin(), eq.end(), [n](const LinearEquality& e) {
        return e.a.size() == n && e.b == 1.0 && (e.a.array() == 1.0).all();
    });
}

ConstraintSet ConstraintSet::with_budget(int n) const {
    if (has_budget(n)) return *this;
    ConstraintSet s = *this;
    s.eq.insert(s.eq.begin(), LinearEquality{Vector::Ones(n), 1.0});
    return s;
}

bool ConstraintSet::is_simple_budget(int n) const {
    return eq.size() == 1 && ineq.empty() && socs.empty() && has_budget(n);
}

double ConstraintSet::max_violation(const Vector& theta) const {
    double worst = 0.0;
    for (const auto& e : eq) worst = std::max(worst, std::abs(e.a.dot(theta) - e.b));
    for (const auto& g : ineq) worst = std::max(worst, g.g.dot(theta) - g.h);
    for (const auto& c : socs) worst = std::max(worst, (c.P * theta).norm() - c.q.dot(theta) - c.r);
    return worst;
}

MortalityModel MortalityModel::from_density(std::vector<double> grid, std::vector<double> density,
                                            double terminal_survival) {
    if (grid.size() != density.size() || grid.empty()) {
        throw std::invalid_argument("MortalityModel::from_density: grid/density size mismatch");
    }
    MortalityModel m;
    m.survival.assign(grid.size(), 0.0);
    m.survival.back() = terminal_survival;
    for (std::size_t i = grid.size() - 1; i-- > 0;) {
        m.survival[i] = m.survival[i + 1] + 0.5 * (grid[i + 1] - grid[i]) * (density[i] + density[i + 1]);
    }
    m.grid = std::move(grid);
    m.density = std::move(density);
    return m;
}

double MortalityModel::density_at(double t) const { return interpolate(grid, density, t); }
double MortalityModel::survival_at(double t) const { return interpolate(grid, survival, t); }

bool Extensions::any() const {
    return mortality || income || insurance || consumption_floor || spending_limit || minimum_cash ||
           max_min_consumption || !time_varying.empty();
}

bool ProblemSpec::is_wealth_homogeneous() const {
    const auto& ex = extensions;
    if (ex.income) return false;
    if (ex.consumption_floor &&
        std::any_of(ex.consumption_floor->v.begin(), ex.consumption_floor->v.end(), [](double v) { return v > 0.0; })) {
        return false;
    }
    if (ex.minimum_cash && ex.minimum_cash->floor &&
        std::any_of(ex.minimum_cash->floor->v.begin(), ex.minimum_cash->floor->v.end(),
                    [](double v) { return v != 0.0; })) {
        return false;
    }
    return true;
}

}  // namespace merton
