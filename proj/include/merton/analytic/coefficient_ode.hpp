#pragma once

#include <functional>
#include <vector>

namespace merton::analytic {

/// Coefficient equation for objectives of the form
///
///     int_0^T ( q_t c^gamma / gamma + p_t w^gamma / gamma ) dt + B_T w_T^gamma / gamma,
///
/// whose value function is a_t w^gamma / gamma with
///
///     -da/dt = (1-gamma) a (a/q_t)^(1/(gamma-1)) + gamma r_ce a + p_t,   a_T = B_T,
///
/// and optimal consumption c = (a_t/q_t)^(1/(gamma-1)) w. Mortality gives
/// q = alpha_t s_t, p = beta p_t and B_T = beta s_T.
struct CoefficientOde {
    double gamma = 0.5;
    double r_ce = 0.0;
    double horizon = 1.0;
    double terminal = 1.0;                         ///< B_T > 0
    std::function<double(double)> consumption_weight;  ///< q_t > 0
    std::function<double(double)> bequest_rate;        ///< p_t >= 0; empty means 0
};

/// a_t tabulated by classical RK4 backward from T and linearly interpolated.
class CoefficientCurve {
public:
    static CoefficientCurve integrate(const CoefficientOde& ode, double step = 1e-3);

    double operator()(double t) const;
    /// c / w = (a_t / q_t)^(1/(gamma-1)).
    double consumption_ratio(double t) const;

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return a_; }

private:
    CoefficientOde ode_;
    std::vector<double> grid_;
    std::vector<double> a_;
};

}  // namespace merton::analytic
