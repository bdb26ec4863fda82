#pragma once

#include <optional>
#include <string>

#include "geoquant/diff_operator.hpp"
#include "geoquant/symplectic.hpp"

namespace geoquant {

enum class ManifoldKind { CotangentBundle, Sphere, Torus2 };

/// Entry of the integrality catalog.
struct ManifoldDescriptor {
    ManifoldKind kind = ManifoldKind::CotangentBundle;
    /// Degrees of freedom for CotangentBundle.
    int dof = 1;
    /// Total symplectic area for Sphere and Torus2.
    double area = 0.0;
    double hbar = 1.0;
};

struct IntegralityResult {
    bool quantizable = false;
    /// The integer class of [omega / (2 pi hbar)] when quantizable.
    std::optional<long> integer_class;
    /// area / (2 pi hbar); 0 for exact forms.
    double class_value = 0.0;
};

/// Relative tolerance used to recognize an integer class.
inline constexpr double kIntegralityTolerance = 1e-9;

/// Throws Error when the descriptor violates its invariants (area, hbar > 0).
IntegralityResult check_integrality(const ManifoldDescriptor& m);

/// f^ = -i hbar X_f - theta(X_f) + f, i.e. -i hbar nabla_{X_f} + f with
/// nabla_X s = X(s) - (i/hbar) theta(X) s. hbar stays symbolic.
DiffOperator prequantum_operator(const Expr& f, const ChartRef& chart);

/// [f1^, f2^] + i hbar ({f1,f2})^ ; the zero operator when Dirac's bracket rule holds.
DiffOperator dirac_q3_residual(const Expr& f1, const Expr& f2, const ChartRef& chart);

/// The symbolic -i*hbar factor.
Expr minus_i_hbar();

}  // namespace geoquant
