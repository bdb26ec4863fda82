#include <cmath>
#include <numbers>

#include <doctest.h>

#include "geoquant/errors.hpp"
#include "geoquant/quadrature.hpp"
#include "geoquant/semiclassic.hpp"

using namespace geoquant;

namespace {

constexpr double kPi = std::numbers::pi;

OneDofSystem oscillator(double omega, double hbar, double maslov = 0.5) {
    SymbolTable t;
    t.add_coordinate("q").add_parameter("w", omega);
    OneDofSystem sys;
    sys.potential = parse("w^2*q^2/2", t);
    sys.parameters = {{"w", omega}};
    sys.hbar = hbar;
    sys.maslov = maslov;
    return sys;
}

// Loop action of V = q^4 at E = 1 (m = 1): 4*sqrt(2)*int_0^1 sqrt(1-q^4) dq = sqrt(2)*B(1/4, 3/2).
double quartic_action_beta() { return std::sqrt(2.0) * std::beta(0.25, 1.5); }

// Same integral by composite Simpson after q = 1 - t^2.
double quartic_action_simpson(int intervals = 1'000'000) {
    auto g = [](double t) {
        double q = 1.0 - t * t;
        return 2.0 * t * std::sqrt(std::max(0.0, 1.0 - q * q * q * q));
    };
    double h = 1.0 / intervals;
    double total = g(0.0) + g(1.0);
    for (int k = 1; k < intervals; ++k) total += (k % 2 ? 4.0 : 2.0) * g(k * h);
    return 4.0 * std::sqrt(2.0) * total * h / 3.0;
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("semiclassic") {

TEST_CASE("Gauss-Legendre rules") {
    GaussLegendreRule rule(5);
    double sum = 0.0;
    for (double w : rule.weights()) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
    // Exact for polynomials of degree 2n-1.
    CHECK(rule.integrate([](double x) { return std::pow(x, 9) + x * x; }, 0.0, 2.0) ==
          doctest::Approx(102.4 + 8.0 / 3.0).epsilon(1e-14));
    auto r = adaptive_gauss_legendre([](double x) { return 1.0 / (1.0 + 1e4 * x * x); }, -1.0, 1.0, 1e-13);
    CHECK(r.value == doctest::Approx(0.02 * std::atan(100.0)).epsilon(1e-13));
    CHECK(r.panels > 2);
}

TEST_CASE("action integral") {
    CHECK(relative(action_integral(OneDofSystem::from_text("q^2/2"), 1.0), 2 * kPi) < 1e-12);

    double beta = quartic_action_beta();
    double simpson = quartic_action_simpson();
    REQUIRE(relative(simpson, beta) < 1e-9);
    OneDofSystem quartic = OneDofSystem::from_text("q^4");
    CHECK(relative(action_integral(quartic, 1.0), simpson) < 1e-9);
    // Scaling: A(E) = A(1) E^(3/4).
    for (double e : {0.01, 0.5, 3.0, 40.0}) CHECK(relative(action_integral(quartic, e), beta * std::pow(e, 0.75)) < 1e-10);

    // Mass enters as sqrt(m).
    CHECK(relative(action_integral(OneDofSystem::from_text("q^2/2", 1.0, 4.0), 1.0), 2 * kPi * 2.0) < 1e-12);
    // Asymmetric well: V = q^2/2 + q, minimum -1/2 at q = -1, same orbit shifted.
    CHECK(relative(action_integral(OneDofSystem::from_text("q^2/2 + q"), 0.5), 2 * kPi) < 1e-12);
}

TEST_CASE("action errors") {
    try {
        action_integral(OneDofSystem::from_text("0"), 1.0);
        FAIL("free particle has no closed orbit");
    } catch (const GeometryError& e) {
        CHECK(std::string(e.what()).find("non-compact") != std::string::npos);
    }
    CHECK_THROWS_AS(action_integral(OneDofSystem::from_text("-q^2"), 1.0), GeometryError);
    try {
        action_integral(OneDofSystem::from_text("(q^2-1)^2"), 0.5);
        FAIL("double well must be rejected");
    } catch (const GeometryError& e) {
        CHECK(std::string(e.what()).find("multi-well") != std::string::npos);
    }
    CHECK_NOTHROW(action_integral(OneDofSystem::from_text("(q^2-1)^2"), 2.0));
    CHECK_THROWS_AS(action_integral(OneDofSystem::from_text("q^2"), -1.0), GeometryError);
}

TEST_CASE("property: action increases with energy") {
    for (const char* v : {"q^2/2", "q^4", "q^4 + q^2 - q", "exp(q) + exp(-q)"}) {
        OneDofSystem sys = OneDofSystem::from_text(v);
        double floor = potential_minimum(sys).second;
        double previous = 0.0;
        for (int k = 1; k <= 30; ++k) {
            double a = action_integral(sys, floor + 0.37 * k);
            CHECK(a > previous);
            previous = a;
        }
    }
}

TEST_CASE("turning points") {
    auto tp = turning_points(OneDofSystem::from_text("q^2/2"), 2.0);
    CHECK(tp.left == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(tp.right == doctest::Approx(2.0).epsilon(1e-14));
    auto [q, v] = potential_minimum(OneDofSystem::from_text("(q-1/3)^2 + 2"));
    CHECK(q == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
    CHECK(v == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("holonomy") {
    OneDofSystem sys = OneDofSystem::from_text("q^2/2");
    CHECK(std::abs(holonomy(sys, 1.0) - 1.0) < 1e-12);
    CHECK(std::abs(holonomy(sys, 0.5) + 1.0) < 1e-12);
    for (double e : {0.1, 0.77, 2.3, 9.0}) CHECK(std::abs(std::abs(holonomy(sys, e)) - 1.0) < 1e-15);
    CHECK_THROWS_AS(holonomy(OneDofSystem::from_text("0"), 1.0), GeometryError);
}

TEST_CASE("Bohr-Sommerfeld levels of the oscillator") {
    auto report = bs_levels(OneDofSystem::from_text("q^2/2"), 3);
    REQUIRE(report.levels.size() == 4);
    for (const auto& level : report.levels) {
        CHECK(relative(level.energy, level.n + 0.5) < 1e-12);
        CHECK(relative(level.action, 2 * kPi * (level.n + 0.5)) < 1e-12);
        CHECK_FALSE(level.oracle.has_value());
    }
    auto half = bs_levels(OneDofSystem::from_text("q^2/2", 0.5), 1);
    CHECK(relative(half.levels[0].energy, 0.25) < 1e-12);
    CHECK(relative(half.levels[1].energy, 0.75) < 1e-12);

    auto zero = bs_levels(OneDofSystem::from_text("q^2/2", 1.0, 1.0, 0.0), 1);
    CHECK(zero.levels[0].degenerate);
    CHECK(zero.levels[0].energy == 0.0);
    CHECK(zero.levels[0].action == 0.0);
    CHECK(relative(zero.levels[1].energy, 1.0) < 1e-12);
}

TEST_CASE("property: exactness and hbar-linearity on oscillators") {
    for (double omega : {0.5, 1.0, 2.0, 3.0})
        for (double hbar : {1.0, 0.5, 0.25}) {
            auto report = bs_levels(oscillator(omega, hbar), 10);
            for (const auto& level : report.levels)
                CHECK(relative(level.energy, hbar * omega * (level.n + 0.5)) < 1e-9);
        }
}

TEST_CASE("property: quartic levels follow the action scaling law") {
    const double a1 = quartic_action_beta();
    auto report = bs_levels(OneDofSystem::from_text("q^4"), 8);
    double previous = 0.0;
    for (const auto& level : report.levels) {
        CHECK(relative(level.energy, std::pow(2 * kPi * (level.n + 0.5) / a1, 4.0 / 3.0)) < 1e-9);
        CHECK(level.action > previous);
        previous = level.action;
    }
}

TEST_CASE("energy search failures") {
    OneDofSystem sys = OneDofSystem::from_text("q^2/2");
    sys.window = 3.0;
    try {
        bs_levels(sys, 10);
        FAIL("levels above the window must not be bracketed");
    } catch (const GeometryError& e) {
        CHECK(std::string(e.what()).find("not bracketed") != std::string::npos);
    }
    CHECK_THROWS_AS(bs_levels(OneDofSystem::from_text("0"), 0), GeometryError);
}

TEST_CASE("finite-difference oracle") {
    OneDofSystem sys = OneDofSystem::from_text("q^2/2");
    const int grid_n = 4000;
    const double L = 12.0;
    const double h = 2 * L / grid_n;
    auto values = oracle_spectrum(sys, 6, grid_n, L);
    REQUIRE(values.size() == 6);
    for (int n = 0; n < 6; ++n) {
        // Leading central-difference error: -(h^2/24) <p^4> = -(h^2/32)(2n^2+2n+1).
        double predicted = n + 0.5 - h * h * (2.0 * n * n + 2.0 * n + 1.0) / 32.0;
        CHECK(std::abs(values[static_cast<std::size_t>(n)] - predicted) < 1e-8);
    }
    CHECK(std::abs(values[0] - 0.5) < 1e-5);
    CHECK(std::abs(values[1] - 1.5) < 1e-5);
    CHECK(std::abs(oracle_spectrum(sys, 1, grid_n, L).at(0) - 0.5) < 1e-5);

    CHECK_THROWS_AS(oracle_spectrum(sys, 2, 100, L), GridError);
    CHECK_THROWS_AS(oracle_spectrum(sys, 4, grid_n, 2.0), GridError);
}

TEST_CASE("oracle convergence on the quartic well") {
    OneDofSystem sys = OneDofSystem::from_text("q^4");
    auto coarse = oracle_spectrum(sys, 6, 2000, 6.0);
    auto middle = oracle_spectrum(sys, 6, 4000, 6.0);
    auto fine = oracle_spectrum(sys, 6, 8000, 6.0);
    for (std::size_t n = 0; n < 6; ++n) {
        double order = std::log2((middle[n] - coarse[n]) / (fine[n] - middle[n]));
        CHECK(order >= 1.9);
    }
    auto refined = oracle_spectrum(sys, 6, 1 << 17, 6.0);
    auto doubled = oracle_spectrum(sys, 6, 1 << 18, 6.0);
    for (std::size_t n = 0; n < 6; ++n) CHECK(std::abs(doubled[n] - refined[n]) < 1e-6);
}

TEST_CASE("joined reports") {
    auto harmonic = bs_report(OneDofSystem::from_text("q^2/2"), 5, 4000, 12.0);
    REQUIRE(harmonic.grid_n == 4000);
    for (const auto& level : harmonic.levels) CHECK(*level.relative_error <= 1e-4);
    CHECK(bs_report(OneDofSystem::from_text("q^2/2"), 0, 4000, 12.0).levels.size() == 1);

    auto quartic = bs_report(OneDofSystem::from_text("q^4"), 5, 8000, 6.0);
    double previous = 1.0;
    for (const auto& level : quartic.levels) {
        CHECK(*level.relative_error < previous);
        previous = *level.relative_error;
        if (level.n >= 1) CHECK(*level.relative_error <= 0.02);
    }
    // The semiclassical ground state of the quartic well is off by about 18%.
    CHECK(quartic.levels[0].relative_error.value() == doctest::Approx(0.1822).epsilon(1e-3));
}

}  // TEST_SUITE
