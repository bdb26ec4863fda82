#include "geoquant/corpus.hpp"

namespace geoquant {

GaussianRational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> numerator(-5, 5);
    std::uniform_int_distribution<long> denominator(1, 3);
    long n = 0;
    while (n == 0) n = numerator(rng);
    return GaussianRational(mpq_class(n, denominator(rng)));
}

namespace {

Expr random_monomial(std::mt19937_64& rng, const std::vector<std::string>& variables, int degree) {
    std::vector<Expr> factors;
    std::uniform_int_distribution<std::size_t> pick(0, variables.size() - 1);
    for (int k = 0; k < degree; ++k) factors.push_back(Expr::symbol(variables[pick(rng)]));
    return Expr::product(std::move(factors));
}

}  // namespace

Expr random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& variables, int max_degree,
                       int max_terms) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::vector<Expr> parts;
    int count = terms(rng);
    for (int t = 0; t < count; ++t)
        parts.push_back(Expr::constant(random_rational(rng)) * random_monomial(rng, variables, degree(rng)));
    return canonicalize(Expr::sum(std::move(parts)));
}

Expr random_polynomial_with_momentum_degree(std::mt19937_64& rng, const std::vector<std::string>& positions,
                                            const std::vector<std::string>& momenta, int max_degree,
                                            int max_momentum_degree, int max_terms) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> momentum_degree(0, max_momentum_degree);
    std::vector<Expr> parts;
    int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        int pd = std::min(momentum_degree(rng), max_degree);
        std::uniform_int_distribution<int> rest(0, max_degree - pd);
        parts.push_back(Expr::constant(random_rational(rng)) * random_monomial(rng, momenta, pd) *
                        random_monomial(rng, positions, rest(rng)));
    }
    return canonicalize(Expr::sum(std::move(parts)));
}

}  // namespace geoquant
