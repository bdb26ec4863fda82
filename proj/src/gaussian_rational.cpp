#include "geoquant/gaussian_rational.hpp"

#include <cctype>

#include "geoquant/errors.hpp"

namespace geoquant {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::from_decimal(std::string_view literal) {
    std::string digits;
    std::size_t fraction_digits = 0;
    bool seen_point = false;
    for (char c : literal) {
        if (c == '.') {
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("invalid numeric literal '" + std::string(literal) + "'");
        digits.push_back(c);
        if (seen_point) ++fraction_digits;
    }
    if (digits.empty()) throw Error("invalid numeric literal '" + std::string(literal) + "'");
    mpz_class numerator(digits, 10);
    mpz_class denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction_digits);
    return {mpq_class(numerator, denominator)};
}

bool GaussianRational::looks_negative() const {
    if (sgn(re_) != 0) return sgn(re_) < 0;
    return sgn(im_) < 0;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw ZeroDivisionError("division by zero constant");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

GaussianRational GaussianRational::pow(long exponent) const {
    if (exponent < 0) return GaussianRational(1) / pow(-exponent);
    GaussianRational result(1);
    GaussianRational base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

namespace {

std::string rational_text(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// im*i without parentheses: "i", "-i", "3*i", "-2/3*i".
std::string imaginary_text(const mpq_class& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return rational_text(im) + "*i";
}

}  // namespace

std::string GaussianRational::to_string() const {
    if (is_real()) return rational_text(re_);
    if (sgn(re_) == 0) return imaginary_text(im_);
    std::string out = "(" + rational_text(re_);
    if (sgn(im_) > 0) {
        out += "+" + imaginary_text(im_);
    } else {
        out += "-" + imaginary_text(-im_);
    }
    return out + ")";
}

}  // namespace geoquant
