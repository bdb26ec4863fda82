#include "geoquant/rational_function.hpp"

#include "geoquant/errors.hpp"

namespace geoquant {

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw ZeroDivisionError("division by the zero polynomial");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.is_constant()) {
        num_ = num_.scaled(GaussianRational(1) / den_.constant_term());
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_.exact_divide(g);
        den_ = den_.exact_divide(g);
    }
    GaussianRational lead = den_.leading().second;
    if (!lead.is_one()) {
        GaussianRational inv = GaussianRational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    if (den_.is_constant()) den_ = Polynomial(1);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    if (!o.den_.is_constant()) den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw ZeroDivisionError("division by the zero polynomial");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw ZeroDivisionError("division by the zero polynomial");
        return RationalFunction(den_.pow(static_cast<unsigned>(-exponent)), num_.pow(static_cast<unsigned>(-exponent)));
    }
    RationalFunction out;
    out.num_ = num_.pow(static_cast<unsigned>(exponent));
    out.den_ = den_.pow(static_cast<unsigned>(exponent));
    out.normalize();
    return out;
}

Expr RationalFunction::to_expr() const {
    Expr n = num_.to_expr();
    if (den_.is_constant()) return n;
    return Expr::quotient(n, den_.to_expr());
}

}  // namespace geoquant
