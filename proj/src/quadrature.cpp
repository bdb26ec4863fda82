#include "geoquant/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "geoquant/errors.hpp"

namespace geoquant {

GaussLegendreRule::GaussLegendreRule(int n) : nodes_(static_cast<std::size_t>(n)), weights_(static_cast<std::size_t>(n)) {
    if (n < 1) throw Error("Gauss-Legendre rule needs at least one node");
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double derivative = 0.0;
        for (int iteration = 0; iteration < 100; ++iteration) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            derivative = n * (z * p1 - p2) / (z * z - 1.0);
            double step = p1 / derivative;
            z -= step;
            if (std::abs(step) < 1e-16) break;
        }
        auto lo = static_cast<std::size_t>(i);
        auto hi = static_cast<std::size_t>(n - 1 - i);
        nodes_[lo] = -z;
        nodes_[hi] = z;
        weights_[lo] = weights_[hi] = 2.0 / ((1.0 - z * z) * derivative * derivative);
    }
}

double GaussLegendreRule::integrate(const std::function<double(double)>& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double radius = 0.5 * (b - a);
    double total = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) total += weights_[k] * f(mid + radius * nodes_[k]);
    return radius * total;
}

namespace {

struct Adaptive {
    const std::function<double(double)>& f;
    const GaussLegendreRule& rule;
    int max_depth;
    QuadratureResult result{};

    double panel(double a, double b) {
        result.evaluations += static_cast<std::size_t>(rule.size());
        return rule.integrate(f, a, b);
    }

    void refine(double a, double b, double whole, double tolerance, int depth) {
        double mid = 0.5 * (a + b);
        double left = panel(a, mid);
        double right = panel(mid, b);
        double split = left + right;
        if (std::abs(split - whole) <= tolerance) {
            result.value += split;
            result.panels += 2;
            return;
        }
        if (depth >= max_depth) throw Error("adaptive quadrature did not converge");
        refine(a, mid, left, 0.5 * tolerance, depth + 1);
        refine(mid, b, right, 0.5 * tolerance, depth + 1);
    }
};

}  // namespace

QuadratureResult adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                         double relative_tolerance, int order, int max_depth) {
    GaussLegendreRule rule(order);
    Adaptive state{f, rule, max_depth};
    double whole = state.panel(a, b);
    double tolerance = std::max(relative_tolerance * std::abs(whole), std::numeric_limits<double>::min());
    state.refine(a, b, whole, tolerance, 0);
    return state.result;
}

}  // namespace geoquant
