#include "merton/analytic/coefficient_ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace merton::analytic {

namespace {

double rhs(const CoefficientOde& ode, double t, double a) {
    // returns da/dt
    const double g = ode.gamma;
    const double q = ode.consumption_weight(t);
    const double p = ode.bequest_rate ? ode.bequest_rate(t) : 0.0;
    return -((1.0 - g) * a * std::pow(a / q, 1.0 / (g - 1.0)) + g * ode.r_ce * a + p);
}

}  // namespace

CoefficientCurve CoefficientCurve::integrate(const CoefficientOde& ode, double step) {
    if (!(ode.terminal > 0.0)) throw std::domain_error("CoefficientCurve::integrate: terminal weight must be positive");
    if (!ode.consumption_weight) throw std::invalid_argument("CoefficientCurve::integrate: missing consumption weight");
    if (!(step > 0.0) || !(ode.horizon > 0.0)) throw std::invalid_argument("CoefficientCurve::integrate: bad step or horizon");

    const auto n = static_cast<std::size_t>(std::ceil(ode.horizon / step - 1e-9));
    const double h = ode.horizon / static_cast<double>(n);
    CoefficientCurve c;
    c.ode_ = ode;
    c.grid_.resize(n + 1);
    c.a_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c.grid_[i] = h * static_cast<double>(i);
    c.grid_[n] = ode.horizon;
    c.a_[n] = ode.terminal;
    for (std::size_t i = n; i-- > 0;) {
        const double t = c.grid_[i + 1];
        const double a = c.a_[i + 1];
        // backward step: dt = -h
        const double k1 = rhs(ode, t, a);
        const double k2 = rhs(ode, t - 0.5 * h, a - 0.5 * h * k1);
        const double k3 = rhs(ode, t - 0.5 * h, a - 0.5 * h * k2);
        const double k4 = rhs(ode, t - h, a - h * k3);
        c.a_[i] = a - h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!(c.a_[i] > 0.0) || !std::isfinite(c.a_[i])) {
            throw std::domain_error("CoefficientCurve::integrate: coefficient left the positive domain");
        }
    }
    return c;
}

double CoefficientCurve::operator()(double t) const {
    if (t <= grid_.front()) return a_.front();
    if (t >= grid_.back()) return a_.back();
    const double h = grid_[1] - grid_[0];
    const auto i = std::min(static_cast<std::size_t>(t / h), grid_.size() - 2);
    const double w = (t - grid_[i]) / (grid_[i + 1] - grid_[i]);
    return a_[i] + w * (a_[i + 1] - a_[i]);
}

double CoefficientCurve::consumption_ratio(double t) const {
    return std::pow((*this)(t) / ode_.consumption_weight(t), 1.0 / (ode_.gamma - 1.0));
}

}  // namespace merton::analytic
