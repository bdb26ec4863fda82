#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoquant/expr.hpp"

namespace geoquant {

/// H = p^2/(2m) + V(q) on T*R. Extra symbols in V must be bound in `parameters`.
struct OneDofSystem {
    Expr potential;
    std::string coordinate = "q";
    std::map<std::string, double> parameters;
    double mass = 1.0;
    double hbar = 1.0;
    double maslov = 0.5;
    /// Turning points and the potential minimum are searched on [-window, window].
    double window = 50.0;

    /// Parses V in `q`, with `hbar` and `m` available as bound parameters.
    static OneDofSystem from_text(std::string_view potential, double hbar = 1.0, double mass = 1.0,
                                  double maslov = 0.5);
};

struct TurningPoints {
    double left = 0.0;
    double right = 0.0;
};

inline constexpr int kQuadratureNodes = 20;
inline constexpr double kQuadratureTolerance = 1e-13;

/// Lowest value of V on the search window, as (q, V(q)).
std::pair<double, double> potential_minimum(const OneDofSystem& sys);
TurningPoints turning_points(const OneDofSystem& sys, double energy);

/// Loop integral of p dq over the closed orbit H = E.
double action_integral(const OneDofSystem& sys, double energy);
std::complex<double> holonomy(const OneDofSystem& sys, double energy);

struct SpectrumLevel {
    int n = 0;
    double action = 0.0;
    double energy = 0.0;
    std::optional<double> oracle;
    std::optional<double> relative_error;
    /// The orbit shrank to the bottom of the well.
    bool degenerate = false;
};

struct SpectrumReport {
    std::vector<SpectrumLevel> levels;
    int quadrature_nodes = kQuadratureNodes;
    double quadrature_tolerance = kQuadratureTolerance;
    std::size_t quadrature_evaluations = 0;
    std::optional<int> grid_n;
    std::optional<double> half_width;
};

/// Solves action(E) = 2*pi*hbar*(n + maslov) for n = 0..n_max.
SpectrumReport bs_levels(const OneDofSystem& sys, int n_max);

/// Lowest `count` eigenvalues of the second-order finite-difference Hamiltonian
/// on (-L, L) with Dirichlet ends and `grid_n` intervals.
std::vector<double> oracle_spectrum(const OneDofSystem& sys, int count, int grid_n, double half_width);

SpectrumReport bs_report(const OneDofSystem& sys, int n_max, int grid_n, double half_width);

}  // namespace geoquant
