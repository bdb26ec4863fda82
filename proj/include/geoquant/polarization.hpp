#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoquant/symplectic.hpp"

namespace geoquant {

/// Complex distribution spanned by vector fields on a chart. The declared rank
/// is the number of spanning fields.
class Distribution {
public:
    Distribution(ChartRef chart, std::vector<VectorField> span);

    /// span{d/dp_1, ..., d/dp_n}.
    static Distribution vertical(const ChartRef& chart);
    /// span{d/dq^1, ..., d/dq^n}.
    static Distribution horizontal(const ChartRef& chart);
    /// {"span": [[2n expression strings], ...]}.
    static Distribution from_json(const ChartRef& chart, std::string_view document);

    const ChartRef& chart() const noexcept { return chart_; }
    const std::vector<VectorField>& span() const noexcept { return span_; }
    int declared_rank() const noexcept { return static_cast<int>(span_.size()); }
    /// Rank of the component matrix over the field of rational functions.
    int generic_rank() const;
    /// Whether `x` lies in the span over the rational-function field.
    bool contains(const VectorField& x) const;
    /// Spanning fields with conjugated coefficients.
    Distribution conjugate() const;

private:
    ChartRef chart_;
    std::vector<VectorField> span_;
};

/// Rank of vectors of expressions over the rational-function field.
int generic_rank(const std::vector<std::vector<Expr>>& rows);

/// rank == n and omega vanishes on every pair of spanning fields.
bool is_lagrangian(const Distribution& d);

/// Every pairwise Lie bracket lies in the span. Throws DistributionError when
/// the spanning set is rank deficient.
bool is_involutive(const Distribution& d);

/// The conjugate spanning set spans the same space.
bool is_real(const Distribution& d);

/// f = v^a(q) p_a + u(q).
struct PolarizedDecomposition {
    std::vector<Expr> v;
    Expr u;
};

/// Splits f into momentum-linear form; throws NotQuantizableError naming the
/// offending monomial otherwise.
PolarizedDecomposition polarized_decompose(const Expr& f, const ChartRef& chart);

/// Mirror decomposition f = w_a(p) q^a + z(p) used by the momentum representation.
PolarizedDecomposition position_linear_decompose(const Expr& f, const ChartRef& chart);

/// [X_f, X_i] in span(P) for every spanning field X_i.
bool preserves_polarization(const Expr& f, const Distribution& p);

/// The brackets [X_f, X_i] that leave the span (empty when f preserves P).
std::vector<VectorField> polarization_violations(const Expr& f, const Distribution& p);

}  // namespace geoquant
