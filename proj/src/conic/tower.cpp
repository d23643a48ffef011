// Power cone -> second-order cone tower rewrite.
//
// For alpha = p/q and (a, b, z) in the power cone we need |z| <= a^(p/q) b^(1-p/q).
// With t >= |z| and 2^L >= q this is the geometric-mean inequality
//
//     t <= ( a^p  b^(q-p)  t^(2^L - q) )^(1/2^L),
//
// which a binary tree of hyperbolic constraints u^2 <= l*r, each written as
// ||(2u, l - r)|| <= l + r, represents exactly.

#include "merton/conic/solver.hpp"

#include <cmath>
#include <sstream>

namespace merton::conic {

namespace {

struct Rational {
    int p;
    int q;
};

std::optional<Rational> as_rational(double alpha, int max_denominator) {
    for (int q = 1; q <= max_denominator; ++q) {
        const double pq = alpha * q;
        const double p = std::round(pq);
        if (std::abs(pq - p) <= 1e-12 * q && p > 0 && p < q) {
            return Rational{static_cast<int>(p), q};
        }
    }
    return std::nullopt;
}

bool same_expr(const AffineExpr& a, const AffineExpr& b) {
    return a.constant() == b.constant() && a.terms() == b.terms();
}

class TowerWriter {
public:
    explicit TowerWriter(ConicProgram& out) : out_(out) {}

    // Returns an expression u with u <= geometric mean of leaves.
    AffineExpr geo_mean(std::span<const AffineExpr> leaves) {
        bool all_same = true;
        for (const AffineExpr& e : leaves) all_same = all_same && same_expr(e, leaves.front());
        if (all_same) return leaves.front();
        const std::size_t half = leaves.size() / 2;
        AffineExpr left = geo_mean(leaves.first(half));
        AffineExpr right = geo_mean(leaves.subspan(half));
        const std::size_t u = out_.add_variables(1);
        hyperbolic(AffineExpr::var(u), left, right);
        return AffineExpr::var(u);
    }

    // u^2 <= l r, l, r >= 0.
    void hyperbolic(const AffineExpr& u, const AffineExpr& l, const AffineExpr& r) {
        AffineExpr sum = l;
        for (const auto& [c, v] : r.terms()) sum.add(c, v);
        sum.add_constant(r.constant());
        AffineExpr two_u;
        for (const auto& [c, v] : u.terms()) two_u.add(c, 2.0 * v);
        two_u.add_constant(2.0 * u.constant());
        AffineExpr diff = l;
        for (const auto& [c, v] : r.terms()) diff.add(c, -v);
        diff.add_constant(-r.constant());
        const AffineExpr rows[3] = {sum, two_u, diff};
        out_.add_second_order(rows);
    }

private:
    ConicProgram& out_;
};

// Reconstructs the affine expression of row `row` from the source program.
std::vector<AffineExpr> row_expressions(const ConicProgram& src) {
    std::vector<AffineExpr> rows(src.num_rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = AffineExpr(src.rhs()[i]);
    for (const Triplet& t : src.triplets()) rows[t.row].add(t.col, -t.value);
    return rows;
}

}  // namespace

ConicProgram power_to_soc_tower(const ConicProgram& program, int max_denominator) {
    const std::vector<AffineExpr> rows = row_expressions(program);
    ConicProgram out;
    out.add_variables(program.num_variables());
    for (std::size_t j = 0; j < program.num_variables(); ++j) {
        if (program.objective()[j] != 0.0) out.set_objective(j, program.objective()[j]);
    }
    for (const Triplet& t : program.quadratic()) out.add_quadratic(t.row, t.col, t.value);

    TowerWriter tower(out);
    std::size_t offset = 0;
    for (const Cone& cone : program.cones()) {
        const std::span<const AffineExpr> block(rows.data() + offset, cone.dim);
        offset += cone.dim;
        if (cone.kind != ConeKind::Power3) {
            out.add_cone(cone.kind, block);
            continue;
        }
        const auto frac = as_rational(cone.alpha, max_denominator);
        if (!frac) {
            std::ostringstream msg;
            msg << "clarabel-socp: power cone exponent " << cone.alpha
                << " has no rational form with denominator <= " << max_denominator;
            throw CapabilityError(msg.str());
        }
        const AffineExpr& a = block[0];
        const AffineExpr& b = block[1];
        const AffineExpr& z = block[2];

        // t >= |z|
        const std::size_t t = out.add_variables(1);
        AffineExpr t_minus_z = AffineExpr::var(t);
        for (const auto& [c, v] : z.terms()) t_minus_z.add(c, -v);
        t_minus_z.add_constant(-z.constant());
        AffineExpr t_plus_z = AffineExpr::var(t);
        for (const auto& [c, v] : z.terms()) t_plus_z.add(c, v);
        t_plus_z.add_constant(z.constant());
        const AffineExpr abs_rows[2] = {t_minus_z, t_plus_z};
        out.add_nonnegative(abs_rows);

        int leaves = 1;
        while (leaves < frac->q) leaves *= 2;
        std::vector<AffineExpr> leaf;
        leaf.reserve(static_cast<std::size_t>(leaves));
        for (int i = 0; i < frac->p; ++i) leaf.push_back(a);
        for (int i = frac->p; i < frac->q; ++i) leaf.push_back(b);
        for (int i = frac->q; i < leaves; ++i) leaf.push_back(AffineExpr::var(t));

        const AffineExpr mean = tower.geo_mean(leaf);
        AffineExpr root = mean;
        root.add(t, -1.0);
        out.add_nonnegative(root);
    }
    out.check();
    return out;
}

}  // namespace merton::conic
