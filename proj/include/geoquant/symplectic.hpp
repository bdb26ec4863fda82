#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoquant/expr.hpp"
#include "geoquant/symbol_table.hpp"

namespace geoquant {

/// Global Darboux chart of T*R^n with the canonical form omega = sum_j dp_j ^ dq^j
/// and a symplectic potential theta satisfying d(theta) = omega.
///
/// Coordinates are ordered (q^1..q^n, p_1..p_n); vector and covector
/// components follow the same order.
class Chart {
public:
    /// Throws ChartError when names clash or d(theta) != omega.
    Chart(std::vector<std::string> positions, std::vector<std::string> momenta,
          std::map<std::string, double> parameters = {}, std::optional<std::vector<std::string>> theta = std::nullopt);

    /// q, p for one degree of freedom; q1..qn, p1..pn otherwise. theta = sum_j p_j dq^j.
    static std::shared_ptr<const Chart> canonical(int dof, std::map<std::string, double> parameters = {});
    /// Parses the chart descriptor document
    /// {"n": int, "q": [...], "p": [...], "theta": [...], "params": {...}}.
    static std::shared_ptr<const Chart> from_json(std::string_view document);

    int dof() const noexcept { return static_cast<int>(positions_.size()); }
    int dimension() const noexcept { return 2 * dof(); }
    const std::vector<std::string>& positions() const noexcept { return positions_; }
    const std::vector<std::string>& momenta() const noexcept { return momenta_; }
    /// Positions followed by momenta.
    const std::vector<std::string>& coordinates() const noexcept { return symbols_.coordinates(); }
    const std::string& coordinate(int k) const { return coordinates().at(static_cast<std::size_t>(k)); }
    int index_of(const std::string& coordinate) const;
    const SymbolTable& symbols() const noexcept { return symbols_; }
    /// Covector components of the symplectic potential.
    const std::vector<Expr>& theta() const noexcept { return theta_; }
    /// Bound value of hbar; 1 unless the parameters override it.
    double hbar() const;

    Expr parse(std::string_view text) const { return geoquant::parse(text, symbols_); }
    /// Throws ForeignSymbolError if `e` uses a symbol not declared on this chart.
    void require_symbols(const Expr& e) const;

    /// Same chart with different parameter values.
    std::shared_ptr<const Chart> with_parameter(const std::string& name, double value) const;

    friend bool operator==(const Chart& a, const Chart& b);

private:
    std::vector<std::string> positions_;
    std::vector<std::string> momenta_;
    SymbolTable symbols_;
    std::vector<Expr> theta_;
};

using ChartRef = std::shared_ptr<const Chart>;

bool same_chart(const ChartRef& a, const ChartRef& b);

/// Vector field in coordinate components (d/dq^1..d/dq^n, d/dp_1..d/dp_n).
class VectorField {
public:
    VectorField(ChartRef chart, std::vector<Expr> components);
    static VectorField zero(ChartRef chart);
    /// The coordinate frame field d/dx^k.
    static VectorField coordinate(ChartRef chart, int k);

    const ChartRef& chart() const noexcept { return chart_; }
    const std::vector<Expr>& components() const noexcept { return components_; }
    const Expr& operator[](std::size_t k) const { return components_.at(k); }
    bool is_zero() const;

    /// Directional derivative X(f) = sum_k X^k d_k f.
    Expr operator()(const Expr& f) const;

    friend bool operator==(const VectorField& a, const VectorField& b) { return a.components_ == b.components_; }

    std::string to_string() const;

private:
    ChartRef chart_;
    std::vector<Expr> components_;
};

/// X_f defined by omega(., X_f) = df: components (df/dp_j on d/dq^j, -df/dq^j on d/dp_j).
VectorField hamiltonian_vector_field(const Expr& f, const ChartRef& chart);

/// {f, g} = sum_j (df/dp_j dg/dq^j - df/dq^j dg/dp_j) = omega(X_f, X_g).
Expr poisson_bracket(const Expr& f, const Expr& g, const ChartRef& chart);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}} in canonical form.
Expr jacobi_residual(const Expr& f, const Expr& g, const Expr& h, const ChartRef& chart);

/// Flow field of Hamilton's equations: dq^j/dt = dH/dp_j, dp_j/dt = -dH/dq^j.
VectorField hamilton_rhs(const Expr& hamiltonian, const ChartRef& chart);

/// [X,Y]^k = sum_i (X^i d_i Y^k - Y^i d_i X^k).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// omega(X, Y) = sum_j (X^{p_j} Y^{q^j} - X^{q^j} Y^{p_j}), bilinear over complex coefficients.
Expr symplectic_form(const VectorField& x, const VectorField& y);

/// Contraction theta(X).
Expr contract_theta(const VectorField& x);

}  // namespace geoquant
