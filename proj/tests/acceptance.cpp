#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "geoquant/cli/commands.hpp"
#include "geoquant/corpus.hpp"
#include "geoquant/errors.hpp"
#include "geoquant/polarization.hpp"
#include "geoquant/prequant.hpp"
#include "geoquant/representation.hpp"
#include "geoquant/semiclassic.hpp"

using namespace geoquant;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> check;
};

std::string fmt(const char* pattern, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, pattern, value);
    return buffer;
}

json cli_report(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    std::ostringstream out, err;
    geoquant::cli::run_cli(args, out, err);
    return json::parse(out.str());
}

Outcome dirac_axioms() {
    json r = cli_report({"verify", "dirac"});
    if (r["status"] != "ok") return {false, r["error"].get<std::string>()};
    json p = r["payload"];
    bool ok = p["q3"]["passed"] == 30 && p["q3"]["total"] == 30 && p["q1"]["passed"] == p["q1"]["total"] &&
              p["q2"]["passed"] == p["q2"]["total"];
    return {ok, "Q1 " + p["q1"]["passed"].dump() + "/" + p["q1"]["total"].dump() + ", Q2 " + p["q2"]["passed"].dump() +
                    "/" + p["q2"]["total"].dump() + ", Q3 " + p["q3"]["passed"].dump() + "/" + p["q3"]["total"].dump()};
}

Outcome canonical_commutator() {
    ChartRef c = Chart::canonical(1);
    DiffOperator bracket =
        commutator(quantize_schrodinger(c->parse("q"), c), quantize_schrodinger(c->parse("p"), c));
    DiffOperator expected = DiffOperator::identity(c).scaled(c->parse("i*hbar"));
    return {bracket == expected, "[q, p] = " + bracket.to_string()};
}

Outcome jacobi_identity() {
    json r = cli_report({"verify", "jacobi"});
    if (r["status"] != "ok") return {false, r["error"].get<std::string>()};
    json p = r["payload"];
    return {p["passed"] == 50 && p["total"] == 50, p["passed"].dump() + "/" + p["total"].dump() + " zero residuals"};
}

Outcome oscillator_exactness() {
    double worst = 0.0;
    for (double omega : {1.0, 0.5, 2.0})
        for (double hbar : {1.0, 0.5, 2.0}) {
            SymbolTable t;
            t.add_coordinate("q").add_parameter("w", omega);
            OneDofSystem sys;
            sys.potential = parse("w^2*q^2/2", t);
            sys.parameters = {{"w", omega}};
            sys.hbar = hbar;
            for (const auto& level : bs_levels(sys, 10).levels) {
                double exact = hbar * omega * (level.n + 0.5);
                worst = std::max(worst, std::abs(level.energy - exact) / exact);
            }
        }
    return {worst <= 1e-9, "worst relative error " + fmt("%.2e", worst) + " over 9 (omega, hbar) pairs, n <= 10"};
}

Outcome quartic_vs_oracle() {
    OneDofSystem sys = OneDofSystem::from_text("q^4");
    SpectrumReport report = bs_report(sys, 5, 8000, 6.0);
    bool within = true, monotone = true;
    std::string errors;
    double previous = INFINITY;
    for (const auto& level : report.levels) {
        double e = *level.relative_error;
        within = within && e <= 0.02;
        monotone = monotone && e < previous;
        previous = e;
        errors += (errors.empty() ? "" : " ") + fmt("%.4f", e);
    }
    auto coarse = oracle_spectrum(sys, 6, 2000, 6.0);
    auto middle = oracle_spectrum(sys, 6, 4000, 6.0);
    auto fine = oracle_spectrum(sys, 6, 8000, 6.0);
    double order = INFINITY;
    for (std::size_t n = 0; n < 6; ++n)
        order = std::min(order, std::log2((middle[n] - coarse[n]) / (fine[n] - middle[n])));
    return {within && monotone && order >= 1.9,
            "relError n=0..5: " + errors + (within ? "" : " (exceeds 2%)") + (monotone ? ", decreasing" : ", not decreasing") +
                ", oracle order " + fmt("%.3f", order)};
}

Outcome fourier_intertwiner() {
    json r = cli_report({"verify", "fourier"});
    if (r["status"] != "ok") return {false, r["error"].get<std::string>()};
    json p = r["payload"];
    double worst = p["worst_residual"], unitarity = p["unitarity_defect"];
    return {worst < 1e-8 && unitarity <= 1e-12,
            "worst residual " + fmt("%.2e", worst) + ", unitarity defect " + fmt("%.2e", unitarity)};
}

Outcome polarized_equivalence() {
    std::mt19937_64 rng(kDefaultSeed);
    int agree = 0, accepted = 0;
    for (int k = 0; k < 40; ++k) {
        ChartRef c = Chart::canonical(1 + k % 2);
        Expr f = random_polynomial_with_momentum_degree(rng, c->positions(), c->momenta(), 3, 3);
        bool decomposes = true;
        try {
            polarized_decompose(f, c);
        } catch (const NotQuantizableError&) {
            decomposes = false;
        }
        accepted += decomposes;
        agree += decomposes == preserves_polarization(f, Distribution::vertical(c));
    }
    return {agree == 40, std::to_string(agree) + "/40 agree (" + std::to_string(accepted) + " polarized)"};
}

Outcome integrality_catalog() {
    bool ok = true;
    for (long k = 1; k <= 5; ++k) {
        auto r = check_integrality({ManifoldKind::Sphere, 1, 4 * kPi * static_cast<double>(k), 1.0});
        ok = ok && r.quantizable && r.integer_class == 2 * k;
    }
    auto rejected = check_integrality({ManifoldKind::Sphere, 1, 4 * kPi * 0.3, 1.0});
    ok = ok && !rejected.quantizable;
    for (int dof : {1, 2, 3})
        for (double hbar : {1.0, 0.5, 0.013}) {
            auto r = check_integrality({ManifoldKind::CotangentBundle, dof, 0.0, hbar});
            ok = ok && r.quantizable && r.integer_class == 0;
        }
    return {ok, "spheres 4*pi*k give class 2k, area 4*pi*0.3 rejected, cotangent class 0"};
}

Outcome holonomy_check() {
    OneDofSystem trivial = OneDofSystem::from_text("q^2/2", 1.0, 1.0, 0.0);
    double worst_one = 0.0;
    for (const auto& level : bs_levels(trivial, 10).levels)
        worst_one = std::max(worst_one, std::abs(holonomy(trivial, level.energy) - 1.0));
    OneDofSystem half = OneDofSystem::from_text("q^2/2");
    double worst_minus = 0.0;
    for (const auto& level : bs_levels(half, 10).levels)
        worst_minus = std::max(worst_minus, std::abs(holonomy(half, level.energy) + 1.0));
    return {worst_one < 1e-9 && worst_minus < 1e-9,
            "max |hol - 1| " + fmt("%.2e", worst_one) + " at d=0, max |hol + 1| " + fmt("%.2e", worst_minus) +
                " at half-integer action"};
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria{
        {1, "Dirac axioms", 10.0, dirac_axioms},
        {2, "canonical commutator", 1.0, canonical_commutator},
        {3, "Jacobi identity", 10.0, jacobi_identity},
        {4, "Bohr-Sommerfeld exactness", 5.0, oscillator_exactness},
        {5, "semiclassical vs oracle", 30.0, quartic_vs_oracle},
        {6, "Fourier intertwiner", 5.0, fourier_intertwiner},
        {7, "polarized-observable equivalence", 10.0, polarized_equivalence},
        {8, "integrality catalog", 1.0, integrality_catalog},
        {9, "holonomy", 2.0, holonomy_check},
    };
    std::vector<int> selected;
    for (int k = 1; k < argc; ++k) selected.push_back(std::stoi(argv[k]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < c.budget_seconds;
        bool passed = v.passed && in_time;
        failures += !passed;
        std::printf("[%s] criterion %d, %s: %s (%.2fs of %.0fs)\n", passed ? "PASS" : "FAIL", c.id, c.title,
                    v.detail.c_str(), seconds, c.budget_seconds);
    }
    return failures == 0 ? 0 : 1;
}
