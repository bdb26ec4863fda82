#include <cmath>
#include <lapacke.h>

#include "geoquant/errors.hpp"
#include "geoquant/semiclassic.hpp"

namespace geoquant {

namespace {

constexpr double kTailFraction = 0.95;
constexpr double kTailMass = 1e-8;

}  // namespace

std::vector<double> oracle_spectrum(const OneDofSystem& sys, int count, int grid_n, double half_width) {
    if (count < 1) throw DomainError("eigenvalue count must be positive");
    if (grid_n < 200) throw GridError("oracle grid needs at least 200 intervals");
    if (!(half_width > 0.0)) throw GridError("oracle half-width must be positive");
    if (count > grid_n - 1) throw GridError("more eigenvalues requested than interior grid points");
    if (!(sys.mass > 0.0) || !(sys.hbar > 0.0)) throw DomainError("mass and hbar must be positive");

    const lapack_int n = grid_n - 1;
    const double h = 2.0 * half_width / grid_n;
    const double kinetic = sys.hbar * sys.hbar / (2.0 * sys.mass * h * h);

    std::vector<std::string> slots{sys.coordinate};
    std::vector<double> values{0.0};
    for (const auto& [name, value] : sys.parameters) {
        slots.push_back(name);
        values.push_back(value);
    }
    CompiledExpr potential(sys.potential, slots);

    std::vector<double> q(static_cast<std::size_t>(n));
    std::vector<double> diagonal(static_cast<std::size_t>(n));
    std::vector<double> off(static_cast<std::size_t>(n - 1), -kinetic);
    for (lapack_int j = 0; j < n; ++j) {
        auto k = static_cast<std::size_t>(j);
        q[k] = -half_width + (j + 1) * h;
        values[0] = q[k];
        double v = potential.real(values);
        if (!std::isfinite(v)) throw DomainError("potential is not finite at q = " + std::to_string(q[k]));
        diagonal[k] = 2.0 * kinetic + v;
    }

    lapack_int found = 0, blocks = 0;
    std::vector<double> eigenvalues(static_cast<std::size_t>(n));
    std::vector<lapack_int> block(static_cast<std::size_t>(n)), split(static_cast<std::size_t>(n));
    lapack_int info = LAPACKE_dstebz('I', 'B', n, 0.0, 0.0, 1, count, 2.0 * LAPACKE_dlamch('S'), diagonal.data(),
                                     off.data(), &found, &blocks, eigenvalues.data(), block.data(), split.data());
    if (info != 0 || found != count) throw Error("Sturm bisection failed (info " + std::to_string(info) + ")");

    std::vector<double> vectors(static_cast<std::size_t>(n) * static_cast<std::size_t>(count));
    std::vector<lapack_int> failed(static_cast<std::size_t>(count));
    info = LAPACKE_dstein(LAPACK_COL_MAJOR, n, diagonal.data(), off.data(), found, eigenvalues.data(), block.data(),
                          split.data(), vectors.data(), n, failed.data());
    if (info != 0) throw Error("inverse iteration failed (info " + std::to_string(info) + ")");

    for (lapack_int m = 0; m < found; ++m) {
        const double* z = vectors.data() + static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
        double total = 0.0, tail = 0.0;
        for (std::size_t k = 0; k < q.size(); ++k) {
            double mass = z[k] * z[k];
            total += mass;
            if (std::abs(q[k]) > kTailFraction * half_width) tail += mass;
        }
        if (tail > kTailMass * total)
            throw GridError("insufficient decay at the boundary for eigenvalue " + std::to_string(m) +
                            " (tail mass " + std::to_string(tail / total) + ")");
    }
    eigenvalues.resize(static_cast<std::size_t>(count));
    return eigenvalues;
}

}  // namespace geoquant
