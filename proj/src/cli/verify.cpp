#include "geoquant/cli/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "geoquant/corpus.hpp"
#include "geoquant/errors.hpp"
#include "geoquant/prequant.hpp"
#include "geoquant/representation.hpp"
#include "geoquant/symplectic.hpp"
#include "geoquant/wave_grid.hpp"

namespace geoquant::cli {

namespace {

constexpr int kPairsPerChart = 15;
constexpr int kConstantsPerChart = 5;
constexpr int kJacobiTriples = 50;
constexpr int kMaxDegree = 3;

struct Tally {
    int passed = 0;
    int total = 0;
    std::string worst = "0";
    std::size_t worst_size = 0;

    void record(bool ok, const std::string& residual = "0", std::size_t size = 0) {
        ++total;
        if (ok) {
            ++passed;
        } else if (size >= worst_size) {
            worst = residual;
            worst_size = size;
        }
    }

    bool clean() const noexcept { return passed == total; }
    nlohmann::json to_json() const { return {{"passed", passed}, {"total", total}, {"worst_residual", worst}}; }
    std::string line(const std::string& label) const {
        return label + " " + std::to_string(passed) + "/" + std::to_string(total);
    }
};

}  // namespace

SuiteOutcome verify_dirac(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Tally q1, q2, q3;
    for (int dof : {1, 2}) {
        ChartRef chart = Chart::canonical(dof);
        for (int k = 0; k < kPairsPerChart; ++k) {
            Expr f = random_polynomial(rng, chart->coordinates(), kMaxDegree);
            Expr g = random_polynomial(rng, chart->coordinates(), kMaxDegree);
            DiffOperator residual = dirac_q3_residual(f, g, chart);
            q3.record(residual.is_zero(), residual.to_string(), residual.terms().size());

            Expr a = Expr::constant(random_rational(rng));
            Expr b = Expr::constant(random_rational(rng));
            DiffOperator combined = prequantum_operator(canonicalize(a * f + b * g), chart);
            DiffOperator separate = prequantum_operator(f, chart).scaled(a) + prequantum_operator(g, chart).scaled(b);
            DiffOperator gap = combined - separate;
            q1.record(gap.is_zero(), gap.to_string(), gap.terms().size());
        }
        for (int k = 0; k < kConstantsPerChart; ++k) {
            Expr alpha = Expr::constant(random_rational(rng));
            DiffOperator gap = prequantum_operator(alpha, chart) - DiffOperator::identity(chart).scaled(alpha);
            q2.record(gap.is_zero(), gap.to_string(), gap.terms().size());
        }
    }
    SuiteOutcome out;
    out.passed = q1.clean() && q2.clean() && q3.clean();
    out.payload = {{"suite", "dirac"},   {"seed", seed},           {"q1", q1.to_json()},
                   {"q2", q2.to_json()}, {"q3", q3.to_json()},     {"passed", q3.passed},
                   {"total", q3.total},  {"worst_residual", q3.worst}};
    out.summary = q1.line("Q1 linearity") + ", " + q2.line("Q2 constants") + ", " + q3.line("Q3 residual");
    return out;
}

SuiteOutcome verify_jacobi(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ChartRef chart = Chart::canonical(2);
    Tally tally;
    for (int k = 0; k < kJacobiTriples; ++k) {
        Expr f = random_polynomial(rng, chart->coordinates(), kMaxDegree);
        Expr g = random_polynomial(rng, chart->coordinates(), kMaxDegree);
        Expr h = random_polynomial(rng, chart->coordinates(), kMaxDegree);
        Expr residual = jacobi_residual(f, g, h, chart);
        std::string text = residual.to_string();
        tally.record(residual.is_zero(), text, text.size());
    }
    SuiteOutcome out;
    out.passed = tally.clean();
    out.payload = {{"suite", "jacobi"},
                   {"seed", seed},
                   {"passed", tally.passed},
                   {"total", tally.total},
                   {"worst_residual", tally.worst}};
    out.summary = tally.line("Jacobi");
    return out;
}

SuiteOutcome verify_fourier() {
    constexpr std::size_t kSamples = 1024;
    constexpr double kHalfLength = 12.0;
    constexpr double kHbar = 1.0;
    ChartRef chart = Chart::canonical(1);
    std::vector<std::pair<std::string, WaveFunctionGrid>> states{
        {"gaussian", WaveFunctionGrid::gaussian(kSamples, kHalfLength, kHbar, 0.5, 1.0)},
        {"hermite0", WaveFunctionGrid::hermite_function(0, kSamples, kHalfLength, kHbar)},
        {"hermite3", WaveFunctionGrid::hermite_function(3, kSamples, kHalfLength, kHbar)},
    };
    nlohmann::json cases = nlohmann::json::array();
    double worst = 0.0;
    double worst_unitarity = 0.0;
    int passed = 0, total = 0;
    for (const auto& [label, psi] : states) {
        double before = psi.norm();
        double unitarity = std::abs(unitary_fourier(psi).norm() - before) / before;
        worst_unitarity = std::max(worst_unitarity, unitarity);
        for (const char* text : {"q", "p", "q + p"}) {
            double residual = fourier_intertwine_residual(chart->parse(text), psi);
            bool ok = residual < kFourierTolerance;
            worst = std::max(worst, residual);
            passed += ok;
            ++total;
            cases.push_back({{"state", label}, {"f", text}, {"residual", residual}, {"passed", ok}});
        }
    }
    SuiteOutcome out;
    out.passed = passed == total && worst_unitarity <= kUnitarityTolerance;
    out.payload = {{"suite", "fourier"},
                   {"N", kSamples},
                   {"L", kHalfLength},
                   {"passed", passed},
                   {"total", total},
                   {"worst_residual", worst},
                   {"unitarity_defect", worst_unitarity},
                   {"cases", cases}};
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, "Fourier %d/%d, worst residual %.3e, unitarity defect %.3e", passed, total,
                  worst, worst_unitarity);
    out.summary = buffer;
    return out;
}

SuiteOutcome run_suite(std::string_view name, std::uint64_t seed) {
    if (name == "dirac") return verify_dirac(seed);
    if (name == "jacobi") return verify_jacobi(seed);
    if (name == "fourier") return verify_fourier();
    throw Error("unknown verification suite '" + std::string(name) + "'");
}

}  // namespace geoquant::cli
