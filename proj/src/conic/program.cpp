#include "merton/conic/program.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace merton::conic {

const char* to_string(ConeKind kind) {
    switch (kind) {
        case ConeKind::Zero: return "ZERO";
        case ConeKind::Nonnegative: return "NONNEG";
        case ConeKind::SecondOrder: return "SOC";
        case ConeKind::Power3: return "POW3";
    }
    return "?";
}

std::size_t ConicProgram::add_variables(std::size_t count) {
    const std::size_t first = num_vars_;
    num_vars_ += count;
    objective_.resize(num_vars_, 0.0);
    return first;
}

void ConicProgram::set_objective(std::size_t col, double coef) {
    if (col >= num_vars_) throw std::out_of_range("set_objective: column out of range");
    objective_[col] = coef;
}

void ConicProgram::add_objective(std::size_t col, double coef) {
    if (col >= num_vars_) throw std::out_of_range("add_objective: column out of range");
    objective_[col] += coef;
}

void ConicProgram::add_cone(ConeKind kind, std::span<const AffineExpr> rows, double alpha) {
    if (rows.empty()) return;
    if (kind == ConeKind::Power3) {
        if (rows.size() != 3) throw std::invalid_argument("power cone needs exactly 3 rows");
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("power cone alpha must lie in (0,1)");
    }
    if (kind == ConeKind::SecondOrder && rows.size() < 2) {
        throw std::invalid_argument("second-order cone needs at least 2 rows");
    }
    // Consecutive zero/nonnegative blocks are merged so that the cone list
    // stays short for the solver.
    const bool mergeable = kind == ConeKind::Zero || kind == ConeKind::Nonnegative;
    if (mergeable && !cones_.empty() && cones_.back().kind == kind) {
        cones_.back().dim += rows.size();
    } else {
        cones_.push_back(Cone{kind, rows.size(), kind == ConeKind::Power3 ? alpha : 0.0});
    }
    for (const AffineExpr& e : rows) {
        const std::size_t row = rhs_.size();
        rhs_.push_back(e.constant());
        // slack = b - A x, so the stored coefficient is the negated term.
        for (const auto& [col, coef] : e.terms()) {
            if (col >= num_vars_) throw std::out_of_range("add_cone: column out of range");
            if (coef != 0.0) triplets_.push_back(Triplet{row, col, -coef});
        }
    }
}

void ConicProgram::add_power3(const AffineExpr& a, const AffineExpr& b, const AffineExpr& z,
                              double alpha) {
    const AffineExpr rows[3] = {a, b, z};
    add_cone(ConeKind::Power3, rows, alpha);
}

void ConicProgram::check() const {
    std::size_t total = 0;
    for (const Cone& c : cones_) {
        if (c.dim == 0) throw std::invalid_argument("cone of dimension zero");
        if (c.kind == ConeKind::Power3) {
            if (c.dim != 3) throw std::invalid_argument("power cone of dimension != 3");
            if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw std::invalid_argument("power cone alpha outside (0,1)");
        }
        total += c.dim;
    }
    if (total != rhs_.size()) throw std::invalid_argument("cone dimensions do not sum to row count");
    if (objective_.size() != num_vars_) throw std::invalid_argument("objective length mismatch");
    for (const Triplet& t : triplets_) {
        if (t.row >= rhs_.size() || t.col >= num_vars_) throw std::invalid_argument("triplet out of range");
        if (t.value == 0.0) throw std::invalid_argument("explicit zero stored in matrix");
        if (!std::isfinite(t.value)) throw std::invalid_argument("non-finite matrix entry");
    }
    for (double v : rhs_) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite right-hand side");
    }
    for (double v : objective_) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite objective coefficient");
    }
    for (const Triplet& t : quadratic_) {
        if (t.row > t.col || t.col >= num_vars_) throw std::invalid_argument("quadratic entry outside the upper triangle");
        if (t.value == 0.0 || !std::isfinite(t.value)) throw std::invalid_argument("bad quadratic entry");
    }
}

void ConicProgram::add_quadratic(std::size_t i, std::size_t j, double value) {
    if (i >= num_vars_ || j >= num_vars_) throw std::out_of_range("add_quadratic: column out of range");
    if (value != 0.0) quadratic_.push_back(Triplet{std::min(i, j), std::max(i, j), value});
}

double ConicProgram::objective_value(std::span<const double> x) const {
    double v = 0.0;
    for (std::size_t j = 0; j < num_vars_; ++j) v += objective_[j] * x[j];
    for (const Triplet& t : quadratic_) v += (t.row == t.col ? 0.5 : 1.0) * t.value * x[t.row] * x[t.col];
    return v;
}

std::vector<double> ConicProgram::slack(std::span<const double> x) const {
    std::vector<double> s = rhs_;
    for (const Triplet& t : triplets_) s[t.row] -= t.value * x[t.col];
    return s;
}

ConicProgram ConicProgram::from_parts(std::size_t num_vars, std::vector<double> objective,
                                      std::vector<Triplet> triplets, std::vector<double> rhs,
                                      std::vector<Cone> cones, std::vector<Triplet> quadratic) {
    ConicProgram p;
    p.quadratic_ = std::move(quadratic);
    p.num_vars_ = num_vars;
    p.objective_ = std::move(objective);
    p.triplets_ = std::move(triplets);
    p.rhs_ = std::move(rhs);
    p.cones_ = std::move(cones);
    p.check();
    return p;
}

// Layout (one record per line, whitespace separated):
//
//   CONIC_PROGRAM 1
//   VARIABLES <n>
//   ROWS <m>
//   OBJECTIVE <k>        then k lines "<col> <value>" (nonzeros only)
//   QUADRATIC <k>        optional; k lines "<row> <col> <value>" of the upper
//                        triangle of P
//   MATRIX <nnz>         then nnz lines "<row> <col> <value>"
//   RHS <k>              then k lines "<row> <value>" (nonzeros only)
//   CONES <p>            then p lines "ZERO <dim>" | "NONNEG <dim>" |
//                        "SOC <dim>" | "POW3 <alpha>"
//   END
//
// Values are printed with 17 significant digits so parsing is exact.
void ConicProgram::write_text(std::ostream& out) const {
    const auto old_prec = out.precision();
    out << std::setprecision(17);
    out << "CONIC_PROGRAM 1\n";
    out << "VARIABLES " << num_vars_ << "\n";
    out << "ROWS " << rhs_.size() << "\n";
    std::size_t nz_obj = 0;
    for (double v : objective_) nz_obj += (v != 0.0);
    out << "OBJECTIVE " << nz_obj << "\n";
    for (std::size_t j = 0; j < objective_.size(); ++j) {
        if (objective_[j] != 0.0) out << j << ' ' << objective_[j] << '\n';
    }
    if (!quadratic_.empty()) {
        out << "QUADRATIC " << quadratic_.size() << "\n";
        for (const Triplet& t : quadratic_) out << t.row << ' ' << t.col << ' ' << t.value << '\n';
    }
    out << "MATRIX " << triplets_.size() << "\n";
    for (const Triplet& t : triplets_) out << t.row << ' ' << t.col << ' ' << t.value << '\n';
    std::size_t nz_rhs = 0;
    for (double v : rhs_) nz_rhs += (v != 0.0);
    out << "RHS " << nz_rhs << "\n";
    for (std::size_t i = 0; i < rhs_.size(); ++i) {
        if (rhs_[i] != 0.0) out << i << ' ' << rhs_[i] << '\n';
    }
    out << "CONES " << cones_.size() << "\n";
    for (const Cone& c : cones_) {
        out << to_string(c.kind) << ' ';
        if (c.kind == ConeKind::Power3) {
            out << c.alpha;
        } else {
            out << c.dim;
        }
        out << '\n';
    }
    out << "END\n";
    out.precision(old_prec);
}

namespace {

void expect_keyword(std::istream& in, const char* keyword) {
    std::string word;
    if (!(in >> word) || word != keyword) {
        throw std::runtime_error(std::string("conic text: expected '") + keyword + "', got '" + word + "'");
    }
}

template <class T>
T read_value(std::istream& in, const char* what) {
    T v{};
    if (!(in >> v)) throw std::runtime_error(std::string("conic text: failed to read ") + what);
    return v;
}

}  // namespace

ConicProgram ConicProgram::read_text(std::istream& in) {
    expect_keyword(in, "CONIC_PROGRAM");
    if (read_value<int>(in, "version") != 1) throw std::runtime_error("conic text: unsupported version");
    expect_keyword(in, "VARIABLES");
    const auto n = read_value<std::size_t>(in, "variable count");
    expect_keyword(in, "ROWS");
    const auto m = read_value<std::size_t>(in, "row count");

    std::vector<double> objective(n, 0.0);
    expect_keyword(in, "OBJECTIVE");
    const auto k_obj = read_value<std::size_t>(in, "objective count");
    for (std::size_t i = 0; i < k_obj; ++i) {
        const auto col = read_value<std::size_t>(in, "objective column");
        const auto val = read_value<double>(in, "objective value");
        if (col >= n) throw std::runtime_error("conic text: objective column out of range");
        objective[col] = val;
    }

    std::vector<Triplet> quadratic;
    std::string word;
    in >> word;
    if (word == "QUADRATIC") {
        const auto k_quad = read_value<std::size_t>(in, "quadratic count");
        for (std::size_t i = 0; i < k_quad; ++i) {
            Triplet t{};
            t.row = read_value<std::size_t>(in, "row");
            t.col = read_value<std::size_t>(in, "col");
            t.value = read_value<double>(in, "value");
            quadratic.push_back(t);
        }
        in >> word;
    }
    if (word != "MATRIX") throw std::runtime_error("conic text: expected 'MATRIX', got '" + word + "'");
    const auto nnz = read_value<std::size_t>(in, "nnz");
    std::vector<Triplet> triplets;
    triplets.reserve(nnz);
    for (std::size_t i = 0; i < nnz; ++i) {
        Triplet t{};
        t.row = read_value<std::size_t>(in, "row");
        t.col = read_value<std::size_t>(in, "col");
        t.value = read_value<double>(in, "value");
        triplets.push_back(t);
    }

    std::vector<double> rhs(m, 0.0);
    expect_keyword(in, "RHS");
    const auto k_rhs = read_value<std::size_t>(in, "rhs count");
    for (std::size_t i = 0; i < k_rhs; ++i) {
        const auto row = read_value<std::size_t>(in, "rhs row");
        const auto val = read_value<double>(in, "rhs value");
        if (row >= m) throw std::runtime_error("conic text: rhs row out of range");
        rhs[row] = val;
    }

    expect_keyword(in, "CONES");
    const auto p = read_value<std::size_t>(in, "cone count");
    std::vector<Cone> cones;
    cones.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
        const auto tag = read_value<std::string>(in, "cone tag");
        if (tag == "ZERO") {
            cones.push_back({ConeKind::Zero, read_value<std::size_t>(in, "dim")});
        } else if (tag == "NONNEG") {
            cones.push_back({ConeKind::Nonnegative, read_value<std::size_t>(in, "dim")});
        } else if (tag == "SOC") {
            cones.push_back({ConeKind::SecondOrder, read_value<std::size_t>(in, "dim")});
        } else if (tag == "POW3") {
            cones.push_back({ConeKind::Power3, 3, read_value<double>(in, "alpha")});
        } else {
            throw std::runtime_error("conic text: unknown cone tag '" + tag + "'");
        }
    }
    expect_keyword(in, "END");
    return from_parts(n, std::move(objective), std::move(triplets), std::move(rhs), std::move(cones),
                      std::move(quadratic));
}

std::string ConicProgram::to_text() const {
    std::ostringstream os;
    write_text(os);
    return os.str();
}

ConicProgram ConicProgram::from_text(const std::string& text) {
    std::istringstream is(text);
    return read_text(is);
}

}  // namespace merton::conic
