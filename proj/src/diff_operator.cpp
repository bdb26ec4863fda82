#include "geoquant/diff_operator.hpp"

#include <algorithm>
#include <numeric>

#include "geoquant/errors.hpp"

namespace geoquant {

DiffOperator::DiffOperator(ChartRef chart) : chart_(std::move(chart)) {
    if (!chart_) throw ChartError("operator without a chart");
}

DiffOperator DiffOperator::identity(ChartRef chart) { return multiplication(std::move(chart), Expr(1)); }

DiffOperator DiffOperator::multiplication(ChartRef chart, const Expr& f) {
    DiffOperator op(std::move(chart));
    op.chart_->require_symbols(f);
    op.add_term(MultiIndex(static_cast<std::size_t>(op.chart_->dimension()), 0), f);
    return op;
}

DiffOperator DiffOperator::derivative(ChartRef chart, int k, int order) {
    MultiIndex alpha(static_cast<std::size_t>(chart->dimension()), 0);
    alpha.at(static_cast<std::size_t>(k)) = order;
    return derivative(std::move(chart), alpha);
}

DiffOperator DiffOperator::derivative(ChartRef chart, const MultiIndex& alpha) {
    DiffOperator op(std::move(chart));
    op.add_term(alpha, Expr(1));
    return op;
}

DiffOperator DiffOperator::from_vector_field(const VectorField& x) {
    DiffOperator op(x.chart());
    for (int k = 0; k < op.chart_->dimension(); ++k) {
        MultiIndex alpha(static_cast<std::size_t>(op.chart_->dimension()), 0);
        alpha[static_cast<std::size_t>(k)] = 1;
        op.add_term(alpha, x[static_cast<std::size_t>(k)]);
    }
    return op;
}

int DiffOperator::order() const {
    int best = 0;
    for (const auto& [alpha, c] : terms_) best = std::max(best, std::accumulate(alpha.begin(), alpha.end(), 0));
    return best;
}

Expr DiffOperator::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Expr() : it->second;
}

void DiffOperator::add_term(const MultiIndex& alpha, const Expr& coefficient) {
    if (static_cast<int>(alpha.size()) != chart_->dimension()) throw Error("multi-index has the wrong length");
    if (std::any_of(alpha.begin(), alpha.end(), [](int k) { return k < 0; })) throw Error("negative derivative order");
    auto it = terms_.find(alpha);
    Expr total = canonicalize(it == terms_.end() ? coefficient : it->second + coefficient);
    if (total.is_zero()) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(alpha, total);
    } else {
        it->second = total;
    }
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    if (!same_chart(chart_, o.chart_)) throw ChartMismatchError();
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
    if (!same_chart(chart_, o.chart_)) throw ChartMismatchError();
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
    return *this;
}

DiffOperator DiffOperator::scaled(const Expr& f) const {
    DiffOperator out(chart_);
    for (const auto& [alpha, c] : terms_) out.add_term(alpha, f * c);
    return out;
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
    return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_;
}

Expr partial(const Expr& f, const Chart& chart, const MultiIndex& alpha) {
    Expr out = f;
    for (std::size_t k = 0; k < alpha.size(); ++k)
        for (int r = 0; r < alpha[k] && !out.is_zero(); ++r) out = differentiate(out, chart.coordinate(static_cast<int>(k)));
    return out;
}

Expr DiffOperator::apply(const Expr& s) const {
    chart_->require_symbols(s);
    std::vector<Expr> parts;
    for (const auto& [alpha, c] : terms_) parts.push_back(c * partial(s, *chart_, alpha));
    return canonicalize(Expr::sum(std::move(parts)));
}

std::string multi_index_label(const Chart& chart, const MultiIndex& alpha) {
    std::string out;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] == 0) continue;
        if (!out.empty()) out += ",";
        out += chart.coordinate(static_cast<int>(k)) + ":" + std::to_string(alpha[k]);
    }
    return out;
}

std::string DiffOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [alpha, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string label = multi_index_label(*chart_, alpha);
        out += "(" + c.to_string() + ")" + (label.empty() ? "" : "*D[" + label + "]");
    }
    return out;
}

namespace {

long binomial(int n, int k) {
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// Calls visit(gamma, weight) for every gamma <= alpha with weight prod C(alpha_k, gamma_k).
template <class Visit>
void for_each_sub_index(const MultiIndex& alpha, Visit&& visit) {
    MultiIndex gamma(alpha.size(), 0);
    while (true) {
        long weight = 1;
        for (std::size_t k = 0; k < alpha.size(); ++k) weight *= binomial(alpha[k], gamma[k]);
        visit(gamma, weight);
        std::size_t k = 0;
        while (k < alpha.size() && gamma[k] == alpha[k]) gamma[k++] = 0;
        if (k == alpha.size()) return;
        ++gamma[k];
    }
}

}  // namespace

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    if (!same_chart(a.chart(), b.chart())) throw ChartMismatchError();
    const Chart& chart = *a.chart();
    DiffOperator out(a.chart());
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            for_each_sub_index(alpha, [&](const MultiIndex& gamma, long weight) {
                Expr derived = partial(cb, chart, gamma);
                if (derived.is_zero()) return;
                MultiIndex index(alpha.size());
                for (std::size_t k = 0; k < alpha.size(); ++k) index[k] = alpha[k] - gamma[k] + beta[k];
                out.add_term(index, Expr(weight) * ca * derived);
            });
        }
    }
    return out;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return compose(a, b) - compose(b, a); }

DiffOperator formal_adjoint(const DiffOperator& a) {
    DiffOperator out(a.chart());
    for (const auto& [alpha, c] : a.terms()) {
        int size = std::accumulate(alpha.begin(), alpha.end(), 0);
        DiffOperator term = compose(DiffOperator::derivative(a.chart(), alpha),
                                    DiffOperator::multiplication(a.chart(), conjugate(c)));
        out += size % 2 == 0 ? term : -term;
    }
    return out;
}

}  // namespace geoquant
