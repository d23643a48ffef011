/**
 * @file program.hpp
 * @brief Standard-form cone program container.
 *
 * A ConicProgram encodes
 *
 *     minimize    (1/2) x'P x + c'x
 *     subject to  s = b - A x,   s in K = K_1 x ... x K_p
 *
 * where each K_i is a zero cone, a nonnegative orthant, a second-order cone
 * {(t, v) : ||v||_2 <= t} or a three-dimensional power cone
 * {(a, b, z) : a^alpha b^(1-alpha) >= |z|, a, b >= 0}.
 *
 * Rows are appended cone block by cone block through add_cone(), which takes
 * one affine expression per row of the block. The sparse matrix is kept as
 * triplets in insertion order; explicit zeros are never stored.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace merton::conic {

enum class ConeKind { Zero, Nonnegative, SecondOrder, Power3 };

struct Cone {
    ConeKind kind;
    std::size_t dim;
    double alpha = 0.0;  ///< only meaningful for Power3

    bool operator==(const Cone&) const = default;
};

struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;

    bool operator==(const Triplet&) const = default;
};

/// Sparse affine expression  constant + sum coef * x[col].
class AffineExpr {
public:
    AffineExpr() = default;
    explicit AffineExpr(double constant) : constant_(constant) {}

    static AffineExpr var(std::size_t col, double coef = 1.0) {
        AffineExpr e;
        e.add(col, coef);
        return e;
    }

    AffineExpr& add(std::size_t col, double coef) {
        if (coef != 0.0) terms_.emplace_back(col, coef);
        return *this;
    }
    AffineExpr& add_constant(double c) {
        constant_ += c;
        return *this;
    }

    double constant() const { return constant_; }
    const std::vector<std::pair<std::size_t, double>>& terms() const { return terms_; }

private:
    double constant_ = 0.0;
    std::vector<std::pair<std::size_t, double>> terms_;
};

class ConicProgram {
public:
    ConicProgram() = default;

    /// Appends `count` fresh variables and returns the index of the first.
    std::size_t add_variables(std::size_t count);
    std::size_t num_variables() const { return num_vars_; }
    std::size_t num_rows() const { return rhs_.size(); }

    void set_objective(std::size_t col, double coef);
    void add_objective(std::size_t col, double coef);
    /// Dense objective, length num_variables().
    const std::vector<double>& objective() const { return objective_; }
    /// Adds `value` to P(i, j) and P(j, i) (once if i == j). P must stay PSD.
    void add_quadratic(std::size_t i, std::size_t j, double value);
    /// Upper triangle of P (row <= col), duplicates allowed.
    const std::vector<Triplet>& quadratic() const { return quadratic_; }

    /// Appends one cone block; rows[i] is the affine expression that must
    /// equal the i-th slack component.
    void add_cone(ConeKind kind, std::span<const AffineExpr> rows, double alpha = 0.0);
    void add_zero(std::span<const AffineExpr> rows) { add_cone(ConeKind::Zero, rows); }
    void add_nonnegative(std::span<const AffineExpr> rows) { add_cone(ConeKind::Nonnegative, rows); }
    void add_zero(const AffineExpr& row) { add_cone(ConeKind::Zero, std::span(&row, 1)); }
    void add_nonnegative(const AffineExpr& row) { add_cone(ConeKind::Nonnegative, std::span(&row, 1)); }
    void add_second_order(std::span<const AffineExpr> rows) { add_cone(ConeKind::SecondOrder, rows); }
    /// (a, b, z) with a^alpha b^(1-alpha) >= |z|.
    void add_power3(const AffineExpr& a, const AffineExpr& b, const AffineExpr& z, double alpha);

    const std::vector<Triplet>& triplets() const { return triplets_; }
    const std::vector<double>& rhs() const { return rhs_; }
    const std::vector<Cone>& cones() const { return cones_; }

    /// Throws std::invalid_argument if an invariant is broken.
    void check() const;

    /// Objective value (1/2) x'P x + c'x.
    double objective_value(std::span<const double> x) const;
    /// s = b - A x.
    std::vector<double> slack(std::span<const double> x) const;

    bool operator==(const ConicProgram&) const = default;

    /// Plain-text sparse format; see write_text() in program.cpp for layout.
    void write_text(std::ostream& out) const;
    static ConicProgram read_text(std::istream& in);
    std::string to_text() const;
    static ConicProgram from_text(const std::string& text);

    /// Assembles directly from parts (used by the reader and transforms).
    static ConicProgram from_parts(std::size_t num_vars, std::vector<double> objective,
                                   std::vector<Triplet> triplets, std::vector<double> rhs,
                                   std::vector<Cone> cones, std::vector<Triplet> quadratic = {});

private:
    std::size_t num_vars_ = 0;
    std::vector<double> objective_;
    std::vector<Triplet> quadratic_;
    std::vector<Triplet> triplets_;
    std::vector<double> rhs_;
    std::vector<Cone> cones_;
};

const char* to_string(ConeKind kind);

}  // namespace merton::conic
