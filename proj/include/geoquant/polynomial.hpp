#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "geoquant/expr.hpp"
#include "geoquant/gaussian_rational.hpp"

namespace geoquant {

/// An indeterminate of the polynomial ring: a symbol or an elementary
/// function applied to a canonical argument (treated as independent).
struct VarInfo {
    enum class Kind { Symbol = 0, Atom = 1 } kind;
    /// Symbol name, or the printed canonical application such as "sin(q)".
    std::string key;
    /// The symbol node or the function application node.
    Expr expr;
};

using Var = std::shared_ptr<const VarInfo>;

Var make_symbol_var(const std::string& name);
Var make_atom_var(Func f, const Expr& canonical_argument);

/// Variable order: symbols before atoms, then by key.
struct VarLess {
    bool operator()(const Var& a, const Var& b) const {
        if (a->kind != b->kind) return a->kind < b->kind;
        return a->key < b->key;
    }
};

/// Sorted by VarLess, exponents strictly positive.
using Monomial = std::vector<std::pair<Var, int>>;

int degree(const Monomial& m);
int exponent_of(const Monomial& m, const Var& v);
Monomial multiply(const Monomial& a, const Monomial& b);

/// Graded lexicographic order: total degree, then exponents compared in variable order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the Gaussian rationals.
class Polynomial {
public:
    using Terms = std::map<Monomial, GaussianRational, GrlexLess>;

    Polynomial() = default;
    Polynomial(GaussianRational c);  // NOLINT(implicit)
    static Polynomial variable(const Var& v, int power = 1);
    static Polynomial term(Monomial m, GaussianRational c);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial.
    GaussianRational constant_term() const;
    /// Largest term in grlex order; requires a nonzero polynomial.
    const std::pair<const Monomial, GaussianRational>& leading() const;
    int total_degree() const;

    std::set<Var, VarLess> variables() const;
    bool contains(const Var& v) const;
    int degree_in(const Var& v) const;
    /// Coefficients of the powers of `v`, each free of `v`.
    std::map<int, Polynomial> coefficients_in(const Var& v) const;
    static Polynomial from_coefficients(const Var& v, const std::map<int, Polynomial>& coefficients);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const GaussianRational& c) const;
    Polynomial pow(unsigned exponent) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Quotient when `divisor` divides this exactly; throws otherwise.
    Polynomial exact_divide(const Polynomial& divisor) const;
    /// Divided by its leading coefficient (zero stays zero).
    Polynomial monic() const;
    /// Monic greatest common divisor (primitive PRS, recursive in the variables).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Derivative treating `v` as an independent indeterminate.
    Polynomial formal_derivative(const Var& v) const;

    /// Sum of terms in descending grlex order.
    Expr to_expr() const;

private:
    void add_term(const Monomial& m, const GaussianRational& c);
    Terms terms_;
};

Expr monomial_expr(const Monomial& m);

}  // namespace geoquant
