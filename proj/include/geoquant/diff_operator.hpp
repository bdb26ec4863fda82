#pragma once

#include <map>
#include <string>
#include <vector>

#include "geoquant/expr.hpp"
#include "geoquant/symplectic.hpp"

namespace geoquant {

/// Orders of the mixed partial derivative, one entry per chart coordinate.
using MultiIndex = std::vector<int>;

/// Linear differential operator sum_alpha c_alpha(x) d^alpha acting on scalar
/// functions (sections in a global trivialization). Coefficients are kept in
/// canonical form and zero terms are dropped, so structural equality is
/// operator equality.
class DiffOperator {
public:
    explicit DiffOperator(ChartRef chart);

    static DiffOperator identity(ChartRef chart);
    /// Multiplication by the function `f`.
    static DiffOperator multiplication(ChartRef chart, const Expr& f);
    /// d^order / dx_k^order.
    static DiffOperator derivative(ChartRef chart, int k, int order = 1);
    static DiffOperator derivative(ChartRef chart, const MultiIndex& alpha);
    /// sum_k X^k d_k.
    static DiffOperator from_vector_field(const VectorField& x);

    const ChartRef& chart() const noexcept { return chart_; }
    const std::map<MultiIndex, Expr>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int order() const;
    /// Coefficient of d^alpha (zero when absent).
    Expr coefficient(const MultiIndex& alpha) const;

    void add_term(const MultiIndex& alpha, const Expr& coefficient);

    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    DiffOperator operator-() const { return scaled(Expr(-1)); }
    /// Every coefficient multiplied by `f` (f on the left: f * A).
    DiffOperator scaled(const Expr& f) const;
    friend bool operator==(const DiffOperator& a, const DiffOperator& b);

    /// Sum of coefficient times mixed partial of `s`, canonicalized.
    Expr apply(const Expr& s) const;

    std::string to_string() const;

private:
    ChartRef chart_;
    std::map<MultiIndex, Expr> terms_;
};

/// "q:1,p:2" style label; empty for the identity index.
std::string multi_index_label(const Chart& chart, const MultiIndex& alpha);

/// d^alpha applied to `f`.
Expr partial(const Expr& f, const Chart& chart, const MultiIndex& alpha);

/// a o b via the Leibniz rule: sum C(alpha,gamma) a_alpha (d^gamma b_beta) d^(alpha-gamma+beta).
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

/// [a, b] = a o b - b o a.
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

/// Formal transpose with respect to the flat volume of the chart:
/// A^dagger s = sum_alpha (-1)^|alpha| d^alpha (conj(c_alpha) s).
DiffOperator formal_adjoint(const DiffOperator& a);

}  // namespace geoquant
