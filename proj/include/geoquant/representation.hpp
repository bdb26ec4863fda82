#pragma once

#include "geoquant/diff_operator.hpp"
#include "geoquant/polarization.hpp"
#include "geoquant/wave_grid.hpp"

namespace geoquant {

/// Schrodinger (vertical polarization) quantization of f = v^a(q) p_a + u(q):
/// -i hbar (v^a d/dq^a + 1/2 dv^a/dq^a) + u. Throws NotQuantizableError.
DiffOperator quantize_schrodinger(const Expr& f, const ChartRef& chart);

/// Momentum representation of f = w_a(p) q^a + z(p):
/// i hbar (w_a d/dp_a + 1/2 dw_a/dp_a) + z. Throws NotQuantizableError.
DiffOperator quantize_momentum(const Expr& f, const ChartRef& chart);

/// Applies `op` to grid samples along chart coordinate `axis`. Coefficients may
/// depend on that coordinate and on parameters only; hbar takes the grid's value.
std::vector<std::complex<double>> apply_on_grid(const DiffOperator& op, int axis, const WaveFunctionGrid& psi);

/// Aliasing guard for fourier_intertwine_residual: samples at the grid ends
/// must be below this fraction of the peak modulus.
inline constexpr double kEdgeDecay = 1e-12;

/// || F(f_schrodinger psi) - f_momentum (F psi) ||_2 / ||psi||_2 on a one-degree-of-freedom chart.
/// Throws GridError when psi or F psi does not decay at the grid ends.
double fourier_intertwine_residual(const Expr& f, const WaveFunctionGrid& psi, const ChartRef& chart);
double fourier_intertwine_residual(const Expr& f, const WaveFunctionGrid& psi);

}  // namespace geoquant
