#pragma once

#include "merton/conic/program.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace merton::conic {

enum class SolveStatus { Optimal, Infeasible, Unbounded, Inaccurate, Failed };

const char* to_string(SolveStatus status);

struct SolverSettings {
    std::string backend = "clarabel";
    double tol_feas = 1e-8;
    double tol_gap = 1e-8;
    unsigned max_iter = 200;
    double time_limit = 0.0;  ///< seconds; 0 = unlimited
    bool verbose = false;
    /// "clarabel" only: when the native solve ends without an optimum (it can
    /// stall on large programs with power cones), retry through the
    /// second-order cone tower and keep that result if it is optimal.
    bool tower_fallback = true;

    /// Default tolerances, relaxed to 1e-6 for large universes (n >= 500).
    static SolverSettings for_universe(std::size_t num_assets);
};

struct SolverStats {
    std::string backend;
    unsigned iterations = 0;
    double solve_seconds = 0.0;  ///< backend-reported solve time
    double wall_seconds = 0.0;   ///< including data conversion
    bool tower_fallback = false; ///< result came from the tower retry
};

struct SolveResult {
    SolveStatus status = SolveStatus::Failed;
    std::vector<double> primal;  ///< empty unless Optimal or Inaccurate
    std::vector<double> dual;    ///< z in the dual cone; empty if the backend cannot map it back
    std::vector<double> slack;   ///< s = b - A x
    double objective = 0.0;
    SolverStats stats;

    bool has_solution() const {
        return status == SolveStatus::Optimal || status == SolveStatus::Inaccurate;
    }
};

/// Thrown when the requested backend cannot handle a cone in the program.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Backends: "clarabel" (all four cone types) and "clarabel-socp", which
/// rewrites power cones with rational exponents into second-order cone
/// towers before solving. Deterministic for fixed program and settings.
SolveResult solve(const ConicProgram& program, const SolverSettings& settings = {});

std::vector<std::string> available_backends();

struct ResidualReport {
    double primal = 0.0;  ///< relative infinity-norm cone violation of s = b - A x
    double dual = 0.0;    ///< relative ||P x + A'z + c||_inf plus dual-cone violation
    double gap = 0.0;     ///< relative primal-dual objective gap
    bool dual_available = true;

    double worst() const;
};

/// Residuals of a primal (and, when present, dual) point. Returns nullopt
/// when the result carries no solution (e.g. status Infeasible).
std::optional<ResidualReport> verify(const ConicProgram& program, const SolveResult& result);

/// Absolute violation of `point` with respect to a single cone.
double cone_violation(const Cone& cone, std::span<const double> point);
/// Absolute violation with respect to the dual cone.
double dual_cone_violation(const Cone& cone, std::span<const double> point);

/// Rewrites every Power3 cone with a rational exponent p/q (q <= max_denominator)
/// as a tower of 3-dimensional second-order cones. The first
/// program.num_variables() columns of the result are the original variables.
/// Throws CapabilityError for exponents without such a representation.
ConicProgram power_to_soc_tower(const ConicProgram& program, int max_denominator = 64);

}  // namespace merton::conic
