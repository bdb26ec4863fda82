#include "geoquant/symplectic.hpp"

#include <algorithm>

#include <json.hpp>

#include "geoquant/errors.hpp"

namespace geoquant {

Chart::Chart(std::vector<std::string> positions, std::vector<std::string> momenta,
             std::map<std::string, double> parameters, std::optional<std::vector<std::string>> theta)
    : positions_(std::move(positions)), momenta_(std::move(momenta)) {
    if (positions_.empty()) throw ChartError("a chart needs at least one degree of freedom");
    if (positions_.size() != momenta_.size()) throw ChartError("position and momentum counts differ");
    try {
        for (const auto& q : positions_) symbols_.add_coordinate(q);
        for (const auto& p : momenta_) symbols_.add_coordinate(p);
        symbols_.add_parameter(kHbar, 1.0);
        for (const auto& [name, value] : parameters) {
            if (name == kHbar) {
                symbols_.bind(kHbar, value);
            } else {
                symbols_.add_parameter(name, value);
            }
        }
    } catch (const ChartError&) {
        throw;
    } catch (const Error& e) {
        throw ChartError(e.what());
    }
    if (hbar() <= 0.0) throw ChartError("hbar must be positive");

    const int n = dof();
    if (theta) {
        if (static_cast<int>(theta->size()) != 2 * n)
            throw ChartError("theta needs " + std::to_string(2 * n) + " components");
        for (const auto& text : *theta) theta_.push_back(canonicalize(geoquant::parse(text, symbols_)));
    } else {
        for (int j = 0; j < n; ++j) theta_.push_back(Expr::symbol(momenta_[static_cast<std::size_t>(j)]));
        for (int j = 0; j < n; ++j) theta_.push_back(Expr());
    }

    // d(theta)(d_a, d_b) = d_a theta_b - d_b theta_a must equal omega(d_a, d_b),
    // which is -1 for (d/dq^j, d/dp_j) and 0 for every other pair with a < b.
    for (int a = 0; a < 2 * n; ++a) {
        for (int b = a + 1; b < 2 * n; ++b) {
            Expr d = differentiate(theta_[static_cast<std::size_t>(b)], coordinate(a)) -
                     differentiate(theta_[static_cast<std::size_t>(a)], coordinate(b));
            Expr expected = (b == a + n) ? Expr(-1) : Expr(0);
            if (!canonicalize(d - expected).is_zero())
                throw ChartError("d(theta) differs from omega on (" + coordinate(a) + ", " + coordinate(b) + ")");
        }
    }
}

std::shared_ptr<const Chart> Chart::canonical(int dof, std::map<std::string, double> parameters) {
    if (dof < 1) throw ChartError("a chart needs at least one degree of freedom");
    std::vector<std::string> q, p;
    for (int j = 1; j <= dof; ++j) {
        q.push_back(dof == 1 ? "q" : "q" + std::to_string(j));
        p.push_back(dof == 1 ? "p" : "p" + std::to_string(j));
    }
    return std::make_shared<const Chart>(std::move(q), std::move(p), std::move(parameters));
}

std::shared_ptr<const Chart> Chart::from_json(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw ChartError(std::string("malformed chart document: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw ChartError("chart document must be a JSON object");
        auto q = doc.at("q").get<std::vector<std::string>>();
        auto p = doc.at("p").get<std::vector<std::string>>();
        if (doc.contains("n") && doc.at("n").get<int>() != static_cast<int>(q.size()))
            throw ChartError("\"n\" does not match the number of positions");
        std::map<std::string, double> params;
        if (doc.contains("params")) params = doc.at("params").get<std::map<std::string, double>>();
        std::optional<std::vector<std::string>> theta;
        if (doc.contains("theta")) theta = doc.at("theta").get<std::vector<std::string>>();
        return std::make_shared<const Chart>(std::move(q), std::move(p), std::move(params), std::move(theta));
    } catch (const nlohmann::json::exception& e) {
        throw ChartError(std::string("invalid chart document: ") + e.what());
    } catch (const ParseError& e) {
        throw ChartError(std::string("invalid theta component: ") + e.what());
    } catch (const UnknownSymbolError& e) {
        throw ChartError(std::string("invalid theta component: ") + e.what());
    }
}

int Chart::index_of(const std::string& coordinate) const {
    const auto& c = coordinates();
    auto it = std::find(c.begin(), c.end(), coordinate);
    if (it == c.end()) throw ForeignSymbolError(coordinate);
    return static_cast<int>(it - c.begin());
}

double Chart::hbar() const { return symbols_.binding(kHbar).value_or(1.0); }

void Chart::require_symbols(const Expr& e) const {
    for (const auto& s : free_symbols(e))
        if (!symbols_.contains(s)) throw ForeignSymbolError(s);
}

std::shared_ptr<const Chart> Chart::with_parameter(const std::string& name, double value) const {
    auto copy = std::make_shared<Chart>(*this);
    if (copy->symbols_.is_parameter(name)) {
        copy->symbols_.bind(name, value);
    } else {
        copy->symbols_.add_parameter(name, value);
    }
    if (copy->hbar() <= 0.0) throw ChartError("hbar must be positive");
    return copy;
}

bool operator==(const Chart& a, const Chart& b) {
    return a.positions_ == b.positions_ && a.momenta_ == b.momenta_ && a.theta_ == b.theta_ &&
           a.symbols_.parameters() == b.symbols_.parameters();
}

bool same_chart(const ChartRef& a, const ChartRef& b) { return a == b || (a && b && *a == *b); }

VectorField::VectorField(ChartRef chart, std::vector<Expr> components) : chart_(std::move(chart)) {
    if (!chart_) throw ChartError("vector field without a chart");
    if (static_cast<int>(components.size()) != chart_->dimension())
        throw ChartError("vector field needs " + std::to_string(chart_->dimension()) + " components");
    components_.reserve(components.size());
    for (auto& c : components) components_.push_back(canonicalize(c));
}

VectorField VectorField::zero(ChartRef chart) {
    std::vector<Expr> c(static_cast<std::size_t>(chart->dimension()));
    return VectorField(std::move(chart), std::move(c));
}

VectorField VectorField::coordinate(ChartRef chart, int k) {
    std::vector<Expr> c(static_cast<std::size_t>(chart->dimension()));
    c.at(static_cast<std::size_t>(k)) = Expr(1);
    return VectorField(std::move(chart), std::move(c));
}

bool VectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Expr& e) { return e.is_zero(); });
}

Expr VectorField::operator()(const Expr& f) const {
    std::vector<Expr> terms;
    for (int k = 0; k < chart_->dimension(); ++k) {
        const Expr& c = components_[static_cast<std::size_t>(k)];
        if (!c.is_zero()) terms.push_back(c * differentiate(f, chart_->coordinate(k)));
    }
    return canonicalize(Expr::sum(std::move(terms)));
}

std::string VectorField::to_string() const {
    std::string out;
    for (int k = 0; k < chart_->dimension(); ++k) {
        const Expr& c = components_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*d/d" + chart_->coordinate(k);
    }
    return out.empty() ? "0" : out;
}

VectorField hamiltonian_vector_field(const Expr& f, const ChartRef& chart) {
    chart->require_symbols(f);
    const int n = chart->dof();
    std::vector<Expr> c(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < n; ++j) {
        c[static_cast<std::size_t>(j)] = differentiate(f, chart->momenta()[static_cast<std::size_t>(j)]);
        c[static_cast<std::size_t>(j + n)] = -differentiate(f, chart->positions()[static_cast<std::size_t>(j)]);
    }
    return VectorField(chart, std::move(c));
}

Expr poisson_bracket(const Expr& f, const Expr& g, const ChartRef& chart) {
    chart->require_symbols(f);
    chart->require_symbols(g);
    std::vector<Expr> terms;
    for (int j = 0; j < chart->dof(); ++j) {
        const auto& q = chart->positions()[static_cast<std::size_t>(j)];
        const auto& p = chart->momenta()[static_cast<std::size_t>(j)];
        terms.push_back(differentiate(f, p) * differentiate(g, q));
        terms.push_back(-(differentiate(f, q) * differentiate(g, p)));
    }
    return canonicalize(Expr::sum(std::move(terms)));
}

Expr jacobi_residual(const Expr& f, const Expr& g, const Expr& h, const ChartRef& chart) {
    return canonicalize(poisson_bracket(f, poisson_bracket(g, h, chart), chart) +
                        poisson_bracket(g, poisson_bracket(h, f, chart), chart) +
                        poisson_bracket(h, poisson_bracket(f, g, chart), chart));
}

VectorField hamilton_rhs(const Expr& hamiltonian, const ChartRef& chart) {
    return hamiltonian_vector_field(hamiltonian, chart);
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    if (!same_chart(x.chart(), y.chart())) throw ChartMismatchError();
    const auto& chart = x.chart();
    std::vector<Expr> c;
    for (int k = 0; k < chart->dimension(); ++k) c.push_back(x(y[static_cast<std::size_t>(k)]) - y(x[static_cast<std::size_t>(k)]));
    return VectorField(chart, std::move(c));
}

Expr symplectic_form(const VectorField& x, const VectorField& y) {
    if (!same_chart(x.chart(), y.chart())) throw ChartMismatchError();
    const int n = x.chart()->dof();
    std::vector<Expr> terms;
    for (int j = 0; j < n; ++j) {
        auto q = static_cast<std::size_t>(j);
        auto p = static_cast<std::size_t>(j + n);
        terms.push_back(x[p] * y[q]);
        terms.push_back(-(x[q] * y[p]));
    }
    return canonicalize(Expr::sum(std::move(terms)));
}

Expr contract_theta(const VectorField& x) {
    std::vector<Expr> terms;
    const auto& theta = x.chart()->theta();
    for (std::size_t k = 0; k < theta.size(); ++k) terms.push_back(theta[k] * x[k]);
    return canonicalize(Expr::sum(std::move(terms)));
}

}  // namespace geoquant
