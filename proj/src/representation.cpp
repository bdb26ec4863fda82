#include "geoquant/representation.hpp"

#include "geoquant/errors.hpp"
#include "geoquant/prequant.hpp"

namespace geoquant {

namespace {

// sign * i hbar (sum_a c_a d/dx_a + 1/2 sum_a dc_a/dx_a) + rest, with x the linear coordinates' partners.
DiffOperator half_form_operator(const PolarizedDecomposition& d, const ChartRef& chart, int first_axis,
                                const Expr& prefactor) {
    DiffOperator op(chart);
    std::vector<Expr> divergence;
    for (int a = 0; a < chart->dof(); ++a) {
        const Expr& c = d.v[static_cast<std::size_t>(a)];
        if (c.is_zero()) continue;
        op += DiffOperator::derivative(chart, first_axis + a).scaled(prefactor * c);
        divergence.push_back(differentiate(c, chart->coordinate(first_axis + a)));
    }
    Expr half_divergence = Expr::constant(GaussianRational(mpq_class(1, 2))) * Expr::sum(std::move(divergence));
    op += DiffOperator::multiplication(chart, prefactor * half_divergence + d.u);
    return op;
}

}  // namespace

DiffOperator quantize_schrodinger(const Expr& f, const ChartRef& chart) {
    return half_form_operator(polarized_decompose(f, chart), chart, 0, minus_i_hbar());
}

DiffOperator quantize_momentum(const Expr& f, const ChartRef& chart) {
    return half_form_operator(position_linear_decompose(f, chart), chart, chart->dof(), -minus_i_hbar());
}

std::vector<std::complex<double>> apply_on_grid(const DiffOperator& op, int axis, const WaveFunctionGrid& psi) {
    const Chart& chart = *op.chart();
    const std::string& coordinate = chart.coordinate(axis);
    std::vector<std::string> slots{coordinate};
    std::vector<std::complex<double>> values{0.0};
    for (const auto& [name, value] : chart.symbols().bindings()) {
        slots.push_back(name);
        values.emplace_back(name == kHbar ? psi.hbar() : value);
    }

    std::vector<std::complex<double>> out(psi.size(), 0.0);
    for (const auto& [alpha, coefficient] : op.terms()) {
        for (std::size_t k = 0; k < alpha.size(); ++k)
            if (alpha[k] != 0 && static_cast<int>(k) != axis)
                throw Error("operator differentiates along " + chart.coordinate(static_cast<int>(k)) +
                            ", not the grid axis " + coordinate);
        for (const auto& s : free_symbols(coefficient))
            if (s != coordinate && !chart.symbols().is_parameter(s))
                throw Error("coefficient " + coefficient.to_string() + " depends on " + s);
        CompiledExpr c(coefficient, slots);
        auto derived = spectral_derivative(psi, alpha[static_cast<std::size_t>(axis)]);
        for (std::size_t j = 0; j < psi.size(); ++j) {
            values[0] = psi.axis(j);
            out[j] += c(values) * derived[j];
        }
    }
    return out;
}

double fourier_intertwine_residual(const Expr& f, const WaveFunctionGrid& psi, const ChartRef& chart) {
    if (chart->dof() != 1) throw Error("the Fourier intertwiner is implemented for one degree of freedom");
    DiffOperator schrodinger = quantize_schrodinger(f, chart);
    DiffOperator momentum = quantize_momentum(f, chart);
    if (psi.edge_ratio() > kEdgeDecay) throw GridError("wave function does not decay at the grid ends");
    WaveFunctionGrid transformed = unitary_fourier(psi);
    if (transformed.edge_ratio() > kEdgeDecay)
        throw GridError("Fourier transform does not decay at the momentum grid ends");

    WaveFunctionGrid left(psi.half_length(), psi.hbar(), apply_on_grid(schrodinger, 0, psi));
    auto lhs = unitary_fourier(left).samples();
    auto rhs = apply_on_grid(momentum, 1, transformed);
    double denominator = psi.norm();
    if (denominator == 0.0) throw GridError("wave function is identically zero");
    return l2_distance(lhs, rhs, psi.spacing()) / denominator;
}

double fourier_intertwine_residual(const Expr& f, const WaveFunctionGrid& psi) {
    return fourier_intertwine_residual(f, psi, Chart::canonical(1, {{kHbar, psi.hbar()}}));
}

}  // namespace geoquant
