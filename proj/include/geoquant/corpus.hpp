#pragma once

#include <random>
#include <string>
#include <vector>

#include "geoquant/expr.hpp"

namespace geoquant {

/// Random polynomial in `variables` with total degree at most `max_degree`.
/// Coefficients are small rationals n/d, |n| <= 5, d in {1,2,3}.
Expr random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& variables, int max_degree,
                       int max_terms = 4);

/// Random polynomial in `positions` and `momenta` whose degree in the momenta
/// is at most `max_momentum_degree` and whose total degree is at most `max_degree`.
Expr random_polynomial_with_momentum_degree(std::mt19937_64& rng, const std::vector<std::string>& positions,
                                            const std::vector<std::string>& momenta, int max_degree,
                                            int max_momentum_degree, int max_terms = 4);

GaussianRational random_rational(std::mt19937_64& rng);

}  // namespace geoquant
