#include "geoquant/prequant.hpp"

#include <cmath>
#include <numbers>

#include "geoquant/errors.hpp"

namespace geoquant {

IntegralityResult check_integrality(const ManifoldDescriptor& m) {
    if (!(m.hbar > 0.0)) throw Error("hbar must be positive");
    IntegralityResult result;
    if (m.kind == ManifoldKind::CotangentBundle) {
        if (m.dof < 1) throw Error("cotangent bundle needs at least one degree of freedom");
        result.quantizable = true;
        result.integer_class = 0;
        return result;
    }
    if (!(m.area > 0.0) || !std::isfinite(m.area)) throw Error("symplectic area must be positive");
    double value = m.area / (2.0 * std::numbers::pi * m.hbar);
    double nearest = std::round(value);
    result.class_value = value;
    if (std::abs(value - nearest) <= kIntegralityTolerance * std::abs(value)) {
        result.quantizable = true;
        result.integer_class = static_cast<long>(nearest);
    }
    return result;
}

Expr minus_i_hbar() { return Expr::constant(GaussianRational(0, -1)) * Expr::symbol(kHbar); }

DiffOperator prequantum_operator(const Expr& f, const ChartRef& chart) {
    VectorField x = hamiltonian_vector_field(f, chart);
    DiffOperator op = DiffOperator::from_vector_field(x).scaled(minus_i_hbar());
    op += DiffOperator::multiplication(chart, f - contract_theta(x));
    return op;
}

DiffOperator dirac_q3_residual(const Expr& f1, const Expr& f2, const ChartRef& chart) {
    DiffOperator a = prequantum_operator(f1, chart);
    DiffOperator b = prequantum_operator(f2, chart);
    DiffOperator bracket = prequantum_operator(poisson_bracket(f1, f2, chart), chart);
    return commutator(a, b) - bracket.scaled(minus_i_hbar());
}

}  // namespace geoquant
