#include "geoquant/semiclassic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <boost/math/tools/minima.hpp>

#include "geoquant/errors.hpp"
#include "geoquant/quadrature.hpp"
#include "geoquant/symbol_table.hpp"

namespace geoquant {

OneDofSystem OneDofSystem::from_text(std::string_view potential, double hbar, double mass, double maslov) {
    if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
    if (!(mass > 0.0)) throw DomainError("mass must be positive");
    SymbolTable table;
    table.add_coordinate("q").add_parameter(kHbar, hbar).add_parameter("m", mass);
    OneDofSystem sys;
    sys.potential = parse(potential, table);
    sys.parameters = {{kHbar, hbar}, {"m", mass}};
    sys.mass = mass;
    sys.hbar = hbar;
    sys.maslov = maslov;
    return sys;
}

namespace {

constexpr int kScanPoints = 4001;

class Well {
public:
    explicit Well(const OneDofSystem& sys) : sys_(sys), values_(1 + sys.parameters.size()) {
        if (!(sys.mass > 0.0) || !(sys.hbar > 0.0)) throw DomainError("mass and hbar must be positive");
        if (!(sys.window > 0.0)) throw DomainError("search window must be positive");
        std::vector<std::string> slots{sys.coordinate};
        std::size_t k = 1;
        for (const auto& [name, value] : sys.parameters) {
            slots.push_back(name);
            values_[k++] = value;
        }
        compiled_.emplace(sys.potential, std::move(slots));
        for (int j = 0; j < kScanPoints; ++j) {
            double q = -sys.window + 2.0 * sys.window * j / (kScanPoints - 1);
            grid_.push_back(q);
            samples_.push_back(potential(q));
        }
    }

    double potential(double q) const {
        values_[0] = q;
        double v = compiled_->real(values_);
        if (!std::isfinite(v)) throw DomainError("potential is not finite at q = " + std::to_string(q));
        return v;
    }

    std::pair<double, double> minimum() const {
        auto it = std::min_element(samples_.begin(), samples_.end());
        auto j = static_cast<std::size_t>(it - samples_.begin());
        if (j == 0 || j + 1 == grid_.size()) throw GeometryError("non-compact leaf: potential has no minimum inside the search window");
        auto f = [this](double q) { return potential(q); };
        auto [q, v] = boost::math::tools::brent_find_minima(f, grid_[j - 1], grid_[j + 1], 52);
        if (v > samples_[j]) return {grid_[j], samples_[j]};
        return {q, v};
    }

    void require_compact(double energy) const {
        if (energy - samples_.front() > 0.0 || energy - samples_.back() > 0.0)
            throw GeometryError("non-compact leaf: no turning point inside the search window");
    }

    TurningPoints turning_points(double energy, double q_min) const {
        require_compact(energy);
        TurningPoints tp{find_edge(energy, q_min, -1), find_edge(energy, q_min, +1)};
        for (std::size_t j = 0; j < grid_.size(); ++j) {
            bool outside = grid_[j] < tp.left || grid_[j] > tp.right;
            if (outside && energy - samples_[j] > 0.0)
                throw GeometryError("level set has more than two turning points (multi-well potential)");
        }
        return tp;
    }

    const OneDofSystem& system() const noexcept { return sys_; }

private:
    // Walks from the well bottom towards the window end until E - V <= 0, then bisects.
    double find_edge(double energy, double q_min, int direction) const {
        double end = direction * sys_.window;
        double step = sys_.window / 2048.0;
        double inside = q_min;
        double outside = q_min;
        for (;;) {
            outside = inside + direction * step;
            if (direction * (outside - end) >= 0.0) {
                outside = end;
                break;
            }
            if (energy - potential(outside) <= 0.0) break;
            inside = outside;
        }
        for (int k = 0; k < 2000; ++k) {
            double mid = 0.5 * (inside + outside);
            if (mid == inside || mid == outside) break;
            (energy - potential(mid) > 0.0 ? inside : outside) = mid;
        }
        return 0.5 * (inside + outside);
    }

    const OneDofSystem& sys_;
    std::optional<CompiledExpr> compiled_;
    mutable std::vector<double> values_;
    std::vector<double> grid_;
    std::vector<double> samples_;
};

struct Action {
    double value = 0.0;
    std::size_t evaluations = 0;
};

Action action(const Well& well, double energy, double q_min, double v_min) {
    if (energy < v_min) throw GeometryError("energy lies below the bottom of the well");
    if (energy == v_min) return {};
    TurningPoints tp = well.turning_points(energy, q_min);
    const double two_m = 2.0 * well.system().mass;
    auto momentum = [&](double q) { return std::sqrt(two_m * std::max(0.0, energy - well.potential(q))); };
    // q = q_end -/+ t^2 removes the square-root behaviour at each turning point.
    double mid = 0.5 * (tp.left + tp.right);
    double reach = std::sqrt(mid - tp.left);
    auto left = [&](double t) { return 2.0 * t * momentum(tp.left + t * t); };
    auto right = [&](double t) { return 2.0 * t * momentum(tp.right - t * t); };
    auto a = adaptive_gauss_legendre(left, 0.0, reach, kQuadratureTolerance, kQuadratureNodes);
    auto b = adaptive_gauss_legendre(right, 0.0, std::sqrt(tp.right - mid), kQuadratureTolerance, kQuadratureNodes);
    return {2.0 * (a.value + b.value), a.evaluations + b.evaluations};
}

}  // namespace

std::pair<double, double> potential_minimum(const OneDofSystem& sys) { return Well(sys).minimum(); }

TurningPoints turning_points(const OneDofSystem& sys, double energy) {
    Well well(sys);
    well.require_compact(energy);
    return well.turning_points(energy, well.minimum().first);
}

double action_integral(const OneDofSystem& sys, double energy) {
    Well well(sys);
    well.require_compact(energy);
    auto [q_min, v_min] = well.minimum();
    return action(well, energy, q_min, v_min).value;
}

std::complex<double> holonomy(const OneDofSystem& sys, double energy) {
    return std::polar(1.0, action_integral(sys, energy) / sys.hbar);
}

SpectrumReport bs_levels(const OneDofSystem& sys, int n_max) {
    if (n_max < 0) throw DomainError("nMax must be nonnegative");
    Well well(sys);
    auto [q_min, v_min] = well.minimum();
    SpectrumReport report;
    auto measure = [&](double energy) {
        try {
            Action a = action(well, energy, q_min, v_min);
            report.quadrature_evaluations += a.evaluations;
            return a.value;
        } catch (const GeometryError&) {
            throw GeometryError("root not bracketed within the energy search window");
        }
    };
    double lo = v_min;
    for (int n = 0; n <= n_max; ++n) {
        const double target = 2.0 * std::numbers::pi * sys.hbar * (n + sys.maslov);
        if (target < 0.0) throw DomainError("negative action target for n = " + std::to_string(n));
        if (target == 0.0) {
            report.levels.push_back({n, 0.0, v_min, std::nullopt, std::nullopt, true});
            continue;
        }
        double width = 1.0;
        double hi = lo + width;
        for (int k = 0; measure(hi) < target; ++k) {
            if (k == 200) throw GeometryError("root not bracketed within the energy search window");
            lo = hi;
            width *= 2.0;
            hi = lo + width;
        }
        for (int k = 0; k < 2000; ++k) {
            double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            (measure(mid) < target ? lo : hi) = mid;
        }
        double energy = 0.5 * (lo + hi);
        report.levels.push_back({n, measure(energy), energy, std::nullopt, std::nullopt, false});
        lo = energy;
    }
    return report;
}

SpectrumReport bs_report(const OneDofSystem& sys, int n_max, int grid_n, double half_width) {
    SpectrumReport report = bs_levels(sys, n_max);
    std::vector<double> oracle = oracle_spectrum(sys, n_max + 1, grid_n, half_width);
    for (auto& level : report.levels) {
        double e = oracle[static_cast<std::size_t>(level.n)];
        level.oracle = e;
        level.relative_error = std::abs(level.energy - e) / std::abs(e);
    }
    report.grid_n = grid_n;
    report.half_width = half_width;
    return report;
}

}  // namespace geoquant
