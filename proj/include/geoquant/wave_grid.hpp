#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace geoquant {

/// Samples of a wave function on the periodic uniform grid
/// x_j = -L + j * 2L/N, j = 0..N-1, with N a power of two (N >= 8).
/// Used for both the position and the momentum axis.
class WaveFunctionGrid {
public:
    using Complex = std::complex<double>;

    /// Throws GridError on a bad size, L <= 0, hbar <= 0 or non-finite samples.
    WaveFunctionGrid(double half_length, double hbar, std::vector<Complex> samples);

    static WaveFunctionGrid sample(std::size_t n, double half_length, double hbar,
                                   const std::function<Complex(double)>& psi);
    /// Normalized Gaussian (pi w^2)^(-1/4) exp(-(x-c)^2 / (2 w^2)).
    static WaveFunctionGrid gaussian(std::size_t n, double half_length, double hbar, double center = 0.0,
                                     double width = 1.0);
    /// Normalized Hermite function of index k in the dimensionless variable x.
    static WaveFunctionGrid hermite_function(int k, std::size_t n, double half_length, double hbar);

    std::size_t size() const noexcept { return samples_.size(); }
    double half_length() const noexcept { return half_length_; }
    double hbar() const noexcept { return hbar_; }
    double spacing() const noexcept { return 2.0 * half_length_ / static_cast<double>(samples_.size()); }
    double axis(std::size_t j) const { return -half_length_ + static_cast<double>(j) * spacing(); }
    const std::vector<Complex>& samples() const noexcept { return samples_; }

    /// Discrete L2 norm sqrt(h * sum |psi_j|^2).
    double norm() const;
    /// max(|psi_0|, |psi_{N-1}|) / max_j |psi_j| (0 for the zero function).
    double edge_ratio() const;

    /// Text format: a JSON header line {"N","L","hbar"} then 2N whitespace-separated reals (re im interleaved).
    static WaveFunctionGrid read(std::istream& in);
    void write(std::ostream& out) const;

private:
    double half_length_;
    double hbar_;
    std::vector<Complex> samples_;
};

/// (F psi)(p) = (2 pi hbar)^(-1/2) sum_j h psi(q_j) exp(-i p q_j / hbar) on the
/// momentum grid with the same N and L. Unitary up to trapezoid accuracy.
WaveFunctionGrid unitary_fourier(const WaveFunctionGrid& psi);

/// d^order psi / dx^order by FFT differentiation of the periodic interpolant.
std::vector<std::complex<double>> spectral_derivative(const WaveFunctionGrid& psi, int order);

/// sqrt(h * sum |a_j - b_j|^2) on a common grid.
double l2_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b, double h);

}  // namespace geoquant
