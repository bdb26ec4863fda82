#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace geoquant {

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendreRule {
public:
    explicit GaussLegendreRule(int n);

    int size() const noexcept { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

    double integrate(const std::function<double(double)>& f, double a, double b) const;

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct QuadratureResult {
    double value = 0.0;
    std::size_t evaluations = 0;
    int panels = 0;
};

/// Recursive bisection until the one-panel and two-panel estimates agree to
/// `relative_tolerance` of the whole integral. Throws Error when `max_depth`
/// is exhausted.
QuadratureResult adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                         double relative_tolerance, int order = 20, int max_depth = 30);

}  // namespace geoquant
