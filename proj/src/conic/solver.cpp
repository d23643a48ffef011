#include "merton/conic/solver.hpp"

#include <clarabel_capi.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace merton::conic {

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::Inaccurate: return "inaccurate";
        case SolveStatus::Failed: return "failed";
    }
    return "?";
}

SolverSettings SolverSettings::for_universe(std::size_t num_assets) {
    SolverSettings s;
    if (num_assets >= 500) {
        s.tol_feas = 1e-6;
        s.tol_gap = 1e-6;
    }
    return s;
}

std::vector<std::string> available_backends() { return {"clarabel", "clarabel-socp"}; }

namespace {

struct Csc {
    std::vector<std::size_t> col_ptr;
    std::vector<std::size_t> row_idx;
    std::vector<double> values;
};

// Column-compressed copy of the triplets with duplicates summed.
Csc to_csc(const std::vector<Triplet>& trip, std::size_t n) {
    std::vector<std::size_t> order(trip.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return trip[a].col != trip[b].col ? trip[a].col < trip[b].col : trip[a].row < trip[b].row;
    });
    Csc csc;
    csc.col_ptr.assign(n + 1, 0);
    csc.row_idx.reserve(trip.size());
    csc.values.reserve(trip.size());
    std::size_t k = 0;
    for (std::size_t col = 0; col < n; ++col) {
        csc.col_ptr[col] = csc.row_idx.size();
        while (k < order.size() && trip[order[k]].col == col) {
            const std::size_t row = trip[order[k]].row;
            double v = 0.0;
            while (k < order.size() && trip[order[k]].col == col && trip[order[k]].row == row) {
                v += trip[order[k]].value;
                ++k;
            }
            if (v != 0.0) {
                csc.row_idx.push_back(row);
                csc.values.push_back(v);
            }
        }
    }
    csc.col_ptr[n] = csc.row_idx.size();
    return csc;
}

SolveStatus map_status(int32_t code) {
    switch (code) {
        case CLARABEL_CAPI_SOLVED: return SolveStatus::Optimal;
        case CLARABEL_CAPI_ALMOST_SOLVED:
        case CLARABEL_CAPI_INSUFFICIENT_PROGRESS: return SolveStatus::Inaccurate;
        case CLARABEL_CAPI_PRIMAL_INFEASIBLE: return SolveStatus::Infeasible;
        case CLARABEL_CAPI_DUAL_INFEASIBLE: return SolveStatus::Unbounded;
        default: return SolveStatus::Failed;
    }
}

SolveResult solve_clarabel(const ConicProgram& p, const SolverSettings& settings) {
    const std::size_t n = p.num_variables();
    const Csc csc = to_csc(p.triplets(), n);
    const Csc pcsc = to_csc(p.quadratic(), n);
    const std::size_t m = p.num_rows();

    std::vector<int32_t> types;
    std::vector<std::size_t> dims;
    std::vector<double> params;
    for (const Cone& c : p.cones()) {
        switch (c.kind) {
            case ConeKind::Zero: types.push_back(CLARABEL_CAPI_CONE_ZERO); break;
            case ConeKind::Nonnegative: types.push_back(CLARABEL_CAPI_CONE_NONNEG); break;
            case ConeKind::SecondOrder: types.push_back(CLARABEL_CAPI_CONE_SOC); break;
            case ConeKind::Power3: types.push_back(CLARABEL_CAPI_CONE_POW3); break;
        }
        dims.push_back(c.dim);
        params.push_back(c.alpha);
    }

    ClarabelCSettings cs{};
    cs.max_iter = settings.max_iter;
    cs.time_limit = settings.time_limit > 0.0 ? settings.time_limit : INFINITY;
    cs.tol_gap_abs = settings.tol_gap;
    cs.tol_gap_rel = settings.tol_gap;
    cs.tol_feas = settings.tol_feas;
    cs.verbose = settings.verbose ? 1 : 0;

    std::vector<double> x(n), z(m), s(m);
    ClarabelCInfo info{};
    clarabel_capi_solve(n, m, pcsc.col_ptr.data(), pcsc.row_idx.data(), pcsc.values.data(), p.objective().data(), csc.col_ptr.data(), csc.row_idx.data(),
                        csc.values.data(), p.rhs().data(), types.size(), types.data(), dims.data(),
                        params.data(), &cs, x.data(), z.data(), s.data(), &info);

    SolveResult r;
    r.status = map_status(info.status);
    r.stats.iterations = info.iterations;
    r.stats.solve_seconds = info.solve_time;
    if (r.has_solution()) {
        r.primal = std::move(x);
        r.dual = std::move(z);
        r.slack = std::move(s);
        r.objective = p.objective_value(r.primal);
    }
    return r;
}

SolveResult solve_tower(const ConicProgram& program, const SolverSettings& settings) {
    const ConicProgram socp = power_to_soc_tower(program);
    SolveResult result = solve_clarabel(socp, settings);
    if (result.has_solution()) {
        // Auxiliary tower columns and rows are dropped; the duals of the
        // rewritten cones do not map back onto the original power cones.
        result.primal.resize(program.num_variables());
        result.slack = program.slack(result.primal);
        result.dual.clear();
        result.objective = program.objective_value(result.primal);
    }
    return result;
}

bool has_power_cone(const ConicProgram& program) {
    return std::any_of(program.cones().begin(), program.cones().end(),
                       [](const Cone& c) { return c.kind == ConeKind::Power3; });
}

}  // namespace

SolveResult solve(const ConicProgram& program, const SolverSettings& settings) {
    program.check();
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    if (settings.backend == "clarabel") {
        result = solve_clarabel(program, settings);
        const bool retry = result.status == SolveStatus::Inaccurate || result.status == SolveStatus::Failed;
        if (retry && settings.tower_fallback && has_power_cone(program)) {
            try {
                SolveResult tower = solve_tower(program, settings);
                if (tower.status == SolveStatus::Optimal) {
                    tower.stats.iterations += result.stats.iterations;
                    tower.stats.solve_seconds += result.stats.solve_seconds;
                    tower.stats.tower_fallback = true;
                    result = std::move(tower);
                }
            } catch (const CapabilityError&) {
                // irrational exponent: keep the native result
            }
        }
    } else if (settings.backend == "clarabel-socp") {
        result = solve_tower(program, settings);
    } else {
        throw CapabilityError("unknown conic backend '" + settings.backend + "'");
    }
    result.stats.backend = settings.backend;
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

double ResidualReport::worst() const {
    return dual_available ? std::max({primal, dual, gap}) : primal;
}

double cone_violation(const Cone& cone, std::span<const double> v) {
    switch (cone.kind) {
        case ConeKind::Zero: {
            double worst = 0.0;
            for (double x : v) worst = std::max(worst, std::abs(x));
            return worst;
        }
        case ConeKind::Nonnegative: {
            double worst = 0.0;
            for (double x : v) worst = std::max(worst, -x);
            return worst;
        }
        case ConeKind::SecondOrder: {
            double norm2 = 0.0;
            for (std::size_t i = 1; i < v.size(); ++i) norm2 += v[i] * v[i];
            return std::max(0.0, std::sqrt(norm2) - v[0]);
        }
        case ConeKind::Power3: {
            const double a = std::max(v[0], 0.0);
            const double b = std::max(v[1], 0.0);
            const double mean = std::pow(a, cone.alpha) * std::pow(b, 1.0 - cone.alpha);
            return std::max({0.0, -v[0], -v[1], std::abs(v[2]) - mean});
        }
    }
    return 0.0;
}

double dual_cone_violation(const Cone& cone, std::span<const double> v) {
    switch (cone.kind) {
        case ConeKind::Zero: return 0.0;  // dual of {0} is the whole space
        case ConeKind::Nonnegative:
        case ConeKind::SecondOrder: return cone_violation(cone, v);
        case ConeKind::Power3: {
            // K*_alpha = {(u, v, w) : (u/alpha)^alpha (v/(1-alpha))^(1-alpha) >= |w|}
            const double al = cone.alpha;
            const double a = std::max(v[0], 0.0) / al;
            const double b = std::max(v[1], 0.0) / (1.0 - al);
            const double mean = std::pow(a, al) * std::pow(b, 1.0 - al);
            return std::max({0.0, -v[0], -v[1], std::abs(v[2]) - mean});
        }
    }
    return 0.0;
}

std::optional<ResidualReport> verify(const ConicProgram& program, const SolveResult& result) {
    if (!result.has_solution() || result.primal.size() != program.num_variables()) return std::nullopt;

    const auto& x = result.primal;
    const std::vector<double> s = program.slack(x);
    double b_norm = 0.0;
    for (double v : program.rhs()) b_norm = std::max(b_norm, std::abs(v));

    ResidualReport rep;
    std::size_t off = 0;
    double viol = 0.0;
    for (const Cone& c : program.cones()) {
        viol = std::max(viol, cone_violation(c, std::span(s).subspan(off, c.dim)));
        off += c.dim;
    }
    rep.primal = viol / (1.0 + b_norm);

    if (result.dual.size() != program.num_rows()) {
        rep.dual_available = false;
        return rep;
    }
    const auto& z = result.dual;
    const auto& c = program.objective();
    std::vector<double> grad(c.begin(), c.end());  // P x + A'z + c
    double xpx = 0.0;
    for (const Triplet& t : program.quadratic()) {
        grad[t.row] += t.value * x[t.col];
        if (t.row != t.col) grad[t.col] += t.value * x[t.row];
        xpx += (t.row == t.col ? 1.0 : 2.0) * t.value * x[t.row] * x[t.col];
    }
    for (const Triplet& t : program.triplets()) grad[t.col] += t.value * z[t.row];
    double c_norm = 0.0;
    double grad_norm = 0.0;
    for (std::size_t j = 0; j < grad.size(); ++j) {
        c_norm = std::max(c_norm, std::abs(c[j]));
        grad_norm = std::max(grad_norm, std::abs(grad[j]));
    }
    off = 0;
    double dual_viol = 0.0;
    for (const Cone& cone : program.cones()) {
        dual_viol = std::max(dual_viol, dual_cone_violation(cone, std::span(z).subspan(off, cone.dim)));
        off += cone.dim;
    }
    rep.dual = std::max(grad_norm, dual_viol) / (1.0 + c_norm);

    // primal (1/2)x'Px + c'x, dual -(1/2)x'Px - b'z
    const double pobj = program.objective_value(x);
    double bz = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) bz += program.rhs()[i] * z[i];
    const double dobj = -0.5 * xpx - bz;
    rep.gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    return rep;
}

}  // namespace merton::conic
