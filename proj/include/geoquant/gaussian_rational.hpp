#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace geoquant {

/// Exact complex scalar re + im*i with arbitrary-precision rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT(implicit)
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational imaginary_unit() { return {0, 1}; }
    /// Exact value of a decimal or integer literal such as "12", "0.25".
    static GaussianRational from_decimal(std::string_view literal);

    const mpq_class& real() const noexcept { return re_; }
    const mpq_class& imag() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const { return is_real() && re_.get_den() == 1; }
    /// Leading sign used when printing: negative real part, or zero real part and negative imaginary part.
    bool looks_negative() const;

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    /// Throws ZeroDivisionError on a zero divisor.
    GaussianRational& operator/=(const GaussianRational& o);
    GaussianRational pow(long exponent) const;

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace geoquant
