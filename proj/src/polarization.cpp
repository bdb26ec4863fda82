#include "geoquant/polarization.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "geoquant/errors.hpp"
#include "geoquant/rational_function.hpp"

namespace geoquant {

int generic_rank(const std::vector<std::vector<Expr>>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<RationalFunction>> m;
    for (const auto& row : rows) {
        std::vector<RationalFunction> r;
        for (const auto& e : row) r.push_back(RationalFunction::from_expr(e));
        m.push_back(std::move(r));
    }
    const std::size_t columns = m.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col].is_zero()) continue;
            RationalFunction factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < columns; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

Distribution::Distribution(ChartRef chart, std::vector<VectorField> span) : chart_(std::move(chart)), span_(std::move(span)) {
    for (const auto& x : span_)
        if (!same_chart(x.chart(), chart_)) throw ChartMismatchError();
}

Distribution Distribution::vertical(const ChartRef& chart) {
    std::vector<VectorField> span;
    for (int j = 0; j < chart->dof(); ++j) span.push_back(VectorField::coordinate(chart, chart->dof() + j));
    return {chart, std::move(span)};
}

Distribution Distribution::horizontal(const ChartRef& chart) {
    std::vector<VectorField> span;
    for (int j = 0; j < chart->dof(); ++j) span.push_back(VectorField::coordinate(chart, j));
    return {chart, std::move(span)};
}

Distribution Distribution::from_json(const ChartRef& chart, std::string_view document) {
    try {
        auto doc = nlohmann::json::parse(document);
        std::vector<VectorField> span;
        for (const auto& field : doc.at("span")) {
            std::vector<Expr> components;
            for (const auto& text : field) components.push_back(chart->parse(text.get<std::string>()));
            span.emplace_back(chart, std::move(components));
        }
        return {chart, std::move(span)};
    } catch (const nlohmann::json::exception& e) {
        throw DistributionError(std::string("invalid distribution document: ") + e.what());
    } catch (const ChartError& e) {
        throw DistributionError(std::string("invalid spanning field: ") + e.what());
    }
}

namespace {

std::vector<std::vector<Expr>> rows_of(const std::vector<VectorField>& fields) {
    std::vector<std::vector<Expr>> rows;
    for (const auto& x : fields) rows.push_back(x.components());
    return rows;
}

}  // namespace

int Distribution::generic_rank() const { return geoquant::generic_rank(rows_of(span_)); }

bool Distribution::contains(const VectorField& x) const {
    if (!same_chart(x.chart(), chart_)) throw ChartMismatchError();
    if (x.is_zero()) return true;
    auto rows = rows_of(span_);
    int base = geoquant::generic_rank(rows);
    rows.push_back(x.components());
    return geoquant::generic_rank(rows) == base;
}

Distribution Distribution::conjugate() const {
    std::vector<VectorField> span;
    for (const auto& x : span_) {
        std::vector<Expr> c;
        for (const auto& e : x.components()) c.push_back(geoquant::conjugate(e));
        span.emplace_back(chart_, std::move(c));
    }
    return {chart_, std::move(span)};
}

bool is_lagrangian(const Distribution& d) {
    if (d.declared_rank() != d.chart()->dof() || d.generic_rank() != d.chart()->dof()) return false;
    const auto& span = d.span();
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = i + 1; j < span.size(); ++j)
            if (!symplectic_form(span[i], span[j]).is_zero()) return false;
    return true;
}

bool is_involutive(const Distribution& d) {
    if (d.generic_rank() != d.declared_rank())
        throw DistributionError("spanning fields are dependent: rank " + std::to_string(d.generic_rank()) +
                                " < declared " + std::to_string(d.declared_rank()));
    const auto& span = d.span();
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = i + 1; j < span.size(); ++j)
            if (!d.contains(lie_bracket(span[i], span[j]))) return false;
    return true;
}

bool is_real(const Distribution& d) {
    auto rows = rows_of(d.span());
    int base = generic_rank(rows);
    Distribution bar = d.conjugate();
    for (const auto& x : bar.span()) rows.push_back(x.components());
    return generic_rank(rows) == base;
}

namespace {

bool mentions_any(const Expr& e, const std::set<std::string>& names) {
    for (const auto& s : free_symbols(e))
        if (names.count(s)) return true;
    return false;
}

// f = sum_a c_a(rest) x_a + r(rest) with `linear` the x_a.
PolarizedDecomposition linear_decompose(const Expr& f, const ChartRef& chart, const std::vector<std::string>& linear,
                                        const std::string& what, const std::string& kind) {
    chart->require_symbols(f);
    std::set<std::string> names(linear.begin(), linear.end());
    RationalFunction rf = RationalFunction::from_expr(f);
    for (const Var& v : rf.denominator().variables())
        if (mentions_any(v->expr, names))
            throw NotQuantizableError("observable is not " + what + ": denominator " +
                                          rf.denominator().to_expr().to_string() + " depends on the " + kind,
                                      rf.denominator().to_expr().to_string());
    for (const auto& [m, c] : rf.numerator().terms()) {
        int degree = 0;
        for (const auto& [v, e] : m) {
            if (v->kind == VarInfo::Kind::Symbol) {
                if (names.count(v->key)) degree += e;
            } else if (mentions_any(v->expr, names)) {
                degree += 2;
            }
        }
        if (degree > 1) {
            std::string monomial = monomial_expr(m).to_string();
            throw NotQuantizableError("observable is not " + what + ": monomial " + monomial, monomial);
        }
    }
    PolarizedDecomposition out;
    std::map<std::string, Expr> zero;
    for (const auto& x : linear) {
        out.v.push_back(differentiate(f, x));
        zero[x] = Expr();
    }
    out.u = substitute(f, zero);
    return out;
}

}  // namespace

PolarizedDecomposition polarized_decompose(const Expr& f, const ChartRef& chart) {
    return linear_decompose(f, chart, chart->momenta(), "momentum-linear", "momenta");
}

PolarizedDecomposition position_linear_decompose(const Expr& f, const ChartRef& chart) {
    return linear_decompose(f, chart, chart->positions(), "position-linear", "positions");
}

std::vector<VectorField> polarization_violations(const Expr& f, const Distribution& p) {
    VectorField xf = hamiltonian_vector_field(f, p.chart());
    std::vector<VectorField> out;
    for (const auto& x : p.span()) {
        VectorField bracket = lie_bracket(xf, x);
        if (!p.contains(bracket)) out.push_back(std::move(bracket));
    }
    return out;
}

bool preserves_polarization(const Expr& f, const Distribution& p) { return polarization_violations(f, p).empty(); }

}  // namespace geoquant
