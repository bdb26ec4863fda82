#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace geoquant::cli {

struct SuiteOutcome {
    bool passed = false;
    nlohmann::json payload;
    std::string summary;
};

/// Q1 linearity, Q2 constants and the Q3 residual on random polynomial pairs
/// (15 on T*R, 15 on T*R^2).
SuiteOutcome verify_dirac(std::uint64_t seed);
/// Jacobi identity on 50 random triples on T*R^2.
SuiteOutcome verify_jacobi(std::uint64_t seed);
/// Fourier intertwining of q, p, q+p on Gaussian and Hermite grids, plus unitarity.
SuiteOutcome verify_fourier();

/// Dispatches by suite name; throws Error for an unknown suite.
SuiteOutcome run_suite(std::string_view name, std::uint64_t seed);

inline constexpr double kFourierTolerance = 1e-8;
inline constexpr double kUnitarityTolerance = 1e-12;

}  // namespace geoquant::cli
