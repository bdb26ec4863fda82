#include "geoquant/wave_grid.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

#include <fftw3.h>
#include <json.hpp>

#include "geoquant/errors.hpp"

namespace geoquant {

namespace {

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

WaveFunctionGrid::WaveFunctionGrid(double half_length, double hbar, std::vector<Complex> samples)
    : half_length_(half_length), hbar_(hbar), samples_(std::move(samples)) {
    if (samples_.size() < 8 || !power_of_two(samples_.size()))
        throw GridError("grid size must be a power of two and at least 8, got " + std::to_string(samples_.size()));
    if (!(half_length_ > 0.0) || !std::isfinite(half_length_)) throw GridError("grid half-length must be positive");
    if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) throw GridError("hbar must be positive");
    for (const auto& z : samples_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw GridError("grid samples must be finite");
}

WaveFunctionGrid WaveFunctionGrid::sample(std::size_t n, double half_length, double hbar,
                                          const std::function<Complex(double)>& psi) {
    std::vector<Complex> values(n);
    double h = 2.0 * half_length / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) values[j] = psi(-half_length + static_cast<double>(j) * h);
    return {half_length, hbar, std::move(values)};
}

WaveFunctionGrid WaveFunctionGrid::gaussian(std::size_t n, double half_length, double hbar, double center,
                                            double width) {
    const double norm = std::pow(std::numbers::pi * width * width, -0.25);
    return sample(n, half_length, hbar, [=](double x) {
        double u = (x - center) / width;
        return Complex(norm * std::exp(-0.5 * u * u), 0.0);
    });
}

WaveFunctionGrid WaveFunctionGrid::hermite_function(int k, std::size_t n, double half_length, double hbar) {
    if (k < 0) throw GridError("Hermite index must be nonnegative");
    return sample(n, half_length, hbar, [k](double x) {
        // psi_0 = pi^(-1/4) e^(-x^2/2); psi_{m+1} = sqrt(2/(m+1)) x psi_m - sqrt(m/(m+1)) psi_{m-1}
        double previous = 0.0;
        double current = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
        for (int m = 0; m < k; ++m) {
            double next = std::sqrt(2.0 / (m + 1)) * x * current - std::sqrt(static_cast<double>(m) / (m + 1)) * previous;
            previous = current;
            current = next;
        }
        return Complex(current, 0.0);
    });
}

double WaveFunctionGrid::norm() const {
    double total = 0.0;
    for (const auto& z : samples_) total += std::norm(z);
    return std::sqrt(spacing() * total);
}

double WaveFunctionGrid::edge_ratio() const {
    double peak = 0.0;
    for (const auto& z : samples_) peak = std::max(peak, std::abs(z));
    if (peak == 0.0) return 0.0;
    return std::max(std::abs(samples_.front()), std::abs(samples_.back())) / peak;
}

WaveFunctionGrid WaveFunctionGrid::read(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw GridError("missing grid header");
    std::size_t n = 0;
    double half_length = 0.0, hbar = 0.0;
    try {
        auto doc = nlohmann::json::parse(header);
        n = doc.at("N").get<std::size_t>();
        half_length = doc.at("L").get<double>();
        hbar = doc.at("hbar").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw GridError(std::string("invalid grid header: ") + e.what());
    }
    std::vector<Complex> samples(n);
    for (std::size_t j = 0; j < n; ++j) {
        double re = 0.0, im = 0.0;
        if (!(in >> re >> im)) throw GridError("grid file has fewer than 2N values");
        samples[j] = {re, im};
    }
    double extra = 0.0;
    if (in >> extra) throw GridError("grid file has more than 2N values");
    return {half_length, hbar, std::move(samples)};
}

void WaveFunctionGrid::write(std::ostream& out) const {
    nlohmann::json header = {{"N", samples_.size()}, {"L", half_length_}, {"hbar", hbar_}};
    out << header.dump() << '\n';
    std::ostringstream body;
    body << std::setprecision(17);
    for (const auto& z : samples_) body << z.real() << ' ' << z.imag() << '\n';
    out << body.str();
}

WaveFunctionGrid unitary_fourier(const WaveFunctionGrid& psi) {
    const std::size_t n = psi.size();
    const double h = psi.spacing();
    const double scale = h / std::sqrt(2.0 * std::numbers::pi * psi.hbar());
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = psi.axis(k);
        std::complex<double> total = 0.0;
        for (std::size_t j = 0; j < n; ++j) total += psi.samples()[j] * std::polar(1.0, -p * psi.axis(j) / psi.hbar());
        out[k] = scale * total;
    }
    return {psi.half_length(), psi.hbar(), std::move(out)};
}

namespace {

// FFTW's planner is not re-entrant.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

void run_fft(std::vector<std::complex<double>>& data, int sign) {
    auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buffer, buffer, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

}  // namespace

std::vector<std::complex<double>> spectral_derivative(const WaveFunctionGrid& psi, int order) {
    if (order < 0) throw GridError("derivative order must be nonnegative");
    std::vector<std::complex<double>> data = psi.samples();
    if (order == 0) return data;
    const std::size_t n = data.size();
    run_fft(data, FFTW_FORWARD);
    const double period = 2.0 * psi.half_length();
    for (std::size_t m = 0; m < n; ++m) {
        if (m == n / 2) {
            data[m] = 0.0;
            continue;
        }
        double index = m < n / 2 ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(n);
        std::complex<double> ik(0.0, 2.0 * std::numbers::pi * index / period);
        std::complex<double> factor = 1.0 / static_cast<double>(n);
        for (int r = 0; r < order; ++r) factor *= ik;
        data[m] *= factor;
    }
    run_fft(data, FFTW_BACKWARD);
    return data;
}

double l2_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b, double h) {
    if (a.size() != b.size()) throw GridError("grids differ in size");
    double total = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) total += std::norm(a[j] - b[j]);
    return std::sqrt(h * total);
}

}  // namespace geoquant
