#pragma once

#include <string>

#include "geoquant/expr.hpp"
#include "geoquant/polynomial.hpp"

namespace geoquant {

/// Quotient of polynomials kept in lowest terms with a monic denominator.
/// Zero is 0/1. Two values are equal exactly when their parts are equal.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Polynomial numerator);  // NOLINT(implicit)
    RationalFunction(Polynomial numerator, Polynomial denominator);
    RationalFunction(GaussianRational c) : RationalFunction(Polynomial(std::move(c))) {}  // NOLINT(implicit)

    /// Canonical rational function of an arbitrary expression.
    static RationalFunction from_expr(const Expr& e);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction pow(long exponent) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Partial derivative with respect to the symbol `name` (chain rule through atoms).
    RationalFunction derivative(const std::string& name) const;

    /// Canonical expression tree.
    Expr to_expr() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace geoquant
