#include "vlab/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "vlab/constants.hpp"
#include "fft.hpp"

namespace vlab::packet {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794; // 1/sqrt(2 pi)

double grid_spacing(const std::vector<double>& grid, const char* what) {
    if (grid.size() < 2) {
        throw std::domain_error(std::string(what) + " grid needs at least 2 points");
    }
    const double dx = (grid.back() - grid.front()) /
                      static_cast<double>(grid.size() - 1);
    if (!(dx > 0.0)) {
        throw std::domain_error(std::string(what) + " grid must be increasing");
    }
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (std::abs(grid[i + 1] - grid[i] - dx) > 1e-9 * dx) {
            throw std::domain_error(std::string(what) + " grid must be uniform");
        }
    }
    return dx;
}

double max_abs(const std::vector<double>& grid) {
    double m = 0.0;
    for (double v : grid) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

void check_nyquist(const std::vector<double>& x_grid, double dx, double k_max) {
    (void)x_grid;
    if (dx * k_max > std::numbers::pi * (1.0 + 1e-12)) {
        throw std::domain_error(
            "x spacing violates the Nyquist bound pi / k_max");
    }
}

bool fft_compatible(const std::vector<double>& k_grid, double dk,
                    const std::vector<double>& x_grid, double dx) {
    const std::size_t n = k_grid.size();
    if (x_grid.size() != n || !detail::is_power_of_two(n)) {
        return false;
    }
    const double product = dx * dk * static_cast<double>(n);
    return std::abs(product - 2.0 * std::numbers::pi) <=
           1e-9 * 2.0 * std::numbers::pi;
}

} // namespace

DispersionRelation::DispersionRelation(std::function<double(double)> omega,
                                       std::string tag)
    : omega_(std::move(omega)), tag_(std::move(tag)) {
    if (!omega_) {
        throw std::invalid_argument("dispersion evaluator must be callable");
    }
}

DispersionRelation DispersionRelation::linear(double speed) {
    return DispersionRelation([speed](double k) { return speed * k; },
                              "linear");
}

DispersionRelation DispersionRelation::quadratic(double coefficient) {
    return DispersionRelation(
        [coefficient](double k) { return coefficient * k * std::abs(k); },
        "quadratic");
}

DispersionRelation DispersionRelation::cubic(double speed, double beta) {
    return DispersionRelation(
        [speed, beta](double k) { return speed * k + beta * k * k * k; },
        "cubic");
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) {
        throw std::invalid_argument("grid needs n >= 2 and hi > lo");
    }
    std::vector<double> g(n);
    const double dx = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        g[i] = lo + static_cast<double>(i) * dx;
    }
    return g;
}

std::vector<double> symmetric_k_grid(double k_max, std::size_t n) {
    if (!(k_max > 0.0)) {
        throw std::invalid_argument("k_max must be positive");
    }
    return uniform_grid(-k_max, k_max, n);
}

std::vector<double> conjugate_x_grid(const std::vector<double>& k_grid) {
    const double dk = grid_spacing(k_grid, "k");
    const std::size_t n = k_grid.size();
    const double dx = 2.0 * std::numbers::pi / (dk * static_cast<double>(n));
    std::vector<double> x(n);
    const double x0 = -dx * static_cast<double>(n / 2);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = x0 + dx * static_cast<double>(j);
    }
    return x;
}

SpectralWavePacket::SpectralWavePacket(std::vector<double> k_grid,
                                       std::vector<Complex> amplitudes,
                                       DispersionRelation dispersion)
    : k_grid_(std::move(k_grid)), amplitudes_(std::move(amplitudes)),
      dispersion_(std::move(dispersion)) {
    k_spacing_ = grid_spacing(k_grid_, "k");
    if (amplitudes_.size() != k_grid_.size()) {
        throw std::domain_error("amplitude count must match the k grid");
    }
    if (std::abs(k_grid_.front() + k_grid_.back()) >
        k_spacing_ * (1.0 + 1e-9)) {
        throw std::domain_error("k grid must be symmetric about 0");
    }

    double amp_max = 0.0;
    for (const Complex& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::domain_error("amplitudes must be finite");
        }
        amp_max = std::max(amp_max, std::abs(a));
    }

    // Propagation-direction condition on omega(k), checked by sampling.
    std::vector<double> omega(k_grid_.size());
    double omega_scale = 0.0;
    for (std::size_t i = 0; i < k_grid_.size(); ++i) {
        omega[i] = dispersion_(k_grid_[i]);
        if (!std::isfinite(omega[i])) {
            throw std::domain_error("dispersion must be finite on the grid");
        }
        omega_scale = std::max(omega_scale, std::abs(omega[i]));
    }
    const double tol = 1e-12 * omega_scale;
    for (std::size_t i = 0; i < k_grid_.size(); ++i) {
        const double k = k_grid_[i];
        if (k > 0.0 && omega[i] < -tol) {
            throw std::domain_error(
                "dispersion violates omega(k) >= 0 for k >= 0");
        }
        if (k < 0.0 && omega[i] > tol) {
            throw std::domain_error(
                "dispersion violates omega(k) <= 0 for k <= 0");
        }
        if (std::abs(k) < 0.25 * k_spacing_) {
            if (std::abs(omega[i]) > tol) {
                throw std::domain_error("dispersion must satisfy omega(0) = 0");
            }
            if (std::abs(amplitudes_[i]) > 1e-12 * amp_max) {
                throw std::domain_error("amplitude must satisfy A(0) = 0");
            }
        }
    }
    // Continuity: no adjacent-sample jump comparable to the full range.
    double omega_min = 0.0;
    double omega_max = 0.0;
    for (double w : omega) {
        omega_min = std::min(omega_min, w);
        omega_max = std::max(omega_max, w);
    }
    const double range = omega_max - omega_min;
    if (range > 0.0) {
        for (std::size_t i = 0; i + 1 < omega.size(); ++i) {
            if (std::abs(omega[i + 1] - omega[i]) > 0.25 * range) {
                throw std::domain_error(
                    "dispersion jumps between adjacent samples; must be continuous");
            }
        }
    }
}

double SpectralWavePacket::norm_squared() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes_) {
        sum += std::norm(a);
    }
    return sum * k_spacing_;
}

double SpectralWavePacket::spectral_centroid() const {
    double weight = 0.0;
    double moment = 0.0;
    for (std::size_t i = 0; i < k_grid_.size(); ++i) {
        const double w = std::norm(amplitudes_[i]);
        weight += w;
        moment += w * k_grid_[i];
    }
    if (weight == 0.0) {
        throw std::domain_error("zero-norm packet has no spectral centroid");
    }
    return moment / weight;
}

PositionWaveFunction synthesize_direct(const SpectralWavePacket& packet,
                                       const std::vector<double>& x_grid,
                                       double t) {
    const double dx = grid_spacing(x_grid, "x");
    check_nyquist(x_grid, dx, max_abs(packet.k_grid()));

    const auto& ks = packet.k_grid();
    const auto& amps = packet.amplitudes();
    const double dk = packet.k_spacing();
    std::vector<Complex> phased(ks.size());
    for (std::size_t n = 0; n < ks.size(); ++n) {
        phased[n] = amps[n] * std::polar(1.0, -packet.dispersion()(ks[n]) * t);
    }

    PositionWaveFunction out;
    out.x_grid = x_grid;
    out.time = t;
    out.values.resize(x_grid.size());
    for (std::size_t j = 0; j < x_grid.size(); ++j) {
        Complex sum(0.0, 0.0);
        for (std::size_t n = 0; n < ks.size(); ++n) {
            sum += phased[n] * std::polar(1.0, ks[n] * x_grid[j]);
        }
        out.values[j] = sum * (dk * kInvSqrt2Pi);
    }
    return out;
}

PositionWaveFunction synthesize(const SpectralWavePacket& packet,
                                const std::vector<double>& x_grid, double t) {
    const double dx = grid_spacing(x_grid, "x");
    const double dk = packet.k_spacing();
    if (!fft_compatible(packet.k_grid(), dk, x_grid, dx)) {
        return synthesize_direct(packet, x_grid, t);
    }
    check_nyquist(x_grid, dx, max_abs(packet.k_grid()));

    const auto& ks = packet.k_grid();
    const auto& amps = packet.amplitudes();
    const std::size_t n = ks.size();
    const double x0 = x_grid.front();

    // F_j = (dk/sqrt(2 pi)) e^{i k0 j dx} sum_n [A_n e^{-i w_n t} e^{i k_n x0}]
    //       e^{2 pi i n j / N}
    std::vector<Complex> work(n);
    for (std::size_t i = 0; i < n; ++i) {
        work[i] = amps[i] *
                  std::polar(1.0, ks[i] * x0 - packet.dispersion()(ks[i]) * t);
    }
    detail::fft_pow2(work, +1);

    PositionWaveFunction out;
    out.x_grid = x_grid;
    out.time = t;
    out.values.resize(n);
    const double k0 = ks.front();
    for (std::size_t j = 0; j < n; ++j) {
        const Complex carrier =
            std::polar(1.0, k0 * dx * static_cast<double>(j));
        out.values[j] = work[j] * carrier * (dk * kInvSqrt2Pi);
    }
    return out;
}

SpectralWavePacket analyze_direct(const PositionWaveFunction& wavefn,
                                  const std::vector<double>& k_grid,
                                  const DispersionRelation& dispersion) {
    const double dx = grid_spacing(wavefn.x_grid, "x");
    if (wavefn.values.size() != wavefn.x_grid.size()) {
        throw std::domain_error("wavefunction values must match its grid");
    }
    check_nyquist(wavefn.x_grid, dx, max_abs(k_grid));
    grid_spacing(k_grid, "k");

    std::vector<Complex> amps(k_grid.size());
    for (std::size_t m = 0; m < k_grid.size(); ++m) {
        Complex sum(0.0, 0.0);
        for (std::size_t j = 0; j < wavefn.x_grid.size(); ++j) {
            sum += wavefn.values[j] *
                   std::polar(1.0, -k_grid[m] * wavefn.x_grid[j]);
        }
        amps[m] = sum * std::polar(dx * kInvSqrt2Pi,
                                   dispersion(k_grid[m]) * wavefn.time);
    }
    return SpectralWavePacket(k_grid, std::move(amps), dispersion);
}

SpectralWavePacket analyze(const PositionWaveFunction& wavefn,
                           const std::vector<double>& k_grid,
                           const DispersionRelation& dispersion) {
    const double dx = grid_spacing(wavefn.x_grid, "x");
    const double dk = grid_spacing(k_grid, "k");
    if (wavefn.values.size() != wavefn.x_grid.size()) {
        throw std::domain_error("wavefunction values must match its grid");
    }
    if (!fft_compatible(k_grid, dk, wavefn.x_grid, dx)) {
        return analyze_direct(wavefn, k_grid, dispersion);
    }
    check_nyquist(wavefn.x_grid, dx, max_abs(k_grid));

    const std::size_t n = k_grid.size();
    const double x0 = wavefn.x_grid.front();
    const double k0 = k_grid.front();

    // G_m = (dx/sqrt(2 pi)) e^{i w_m t} e^{-i k_m x0}
    //       sum_j [F_j e^{-i k0 j dx}] e^{-2 pi i m j / N}
    std::vector<Complex> work(n);
    for (std::size_t j = 0; j < n; ++j) {
        work[j] = wavefn.values[j] *
                  std::polar(1.0, -k0 * dx * static_cast<double>(j));
    }
    detail::fft_pow2(work, -1);

    std::vector<Complex> amps(n);
    for (std::size_t m = 0; m < n; ++m) {
        amps[m] = work[m] * std::polar(dx * kInvSqrt2Pi,
                                       dispersion(k_grid[m]) * wavefn.time -
                                           k_grid[m] * x0);
    }
    return SpectralWavePacket(k_grid, std::move(amps), dispersion);
}

ParsevalResult parseval_check(const SpectralWavePacket& packet,
                              const PositionWaveFunction& wavefn) {
    const double dx = grid_spacing(wavefn.x_grid, "x");
    double norm_x = 0.0;
    for (const Complex& v : wavefn.values) {
        norm_x += std::norm(v);
    }
    norm_x *= dx;
    const double norm_k = packet.norm_squared();
    const double scale = std::max(norm_k, norm_x);
    const double gap = scale > 0.0 ? std::abs(norm_k - norm_x) / scale : 0.0;
    return {norm_k, norm_x, gap};
}

double group_velocity(const SpectralWavePacket& packet) {
    const double k_bar = packet.spectral_centroid(); // throws on zero norm
    const double h = packet.k_spacing();
    return (packet.dispersion()(k_bar + h) - packet.dispersion()(k_bar - h)) /
           (2.0 * h);
}

double total_energy(const SpectralWavePacket& packet, double tension,
                    double group_velocity) {
    if (!(group_velocity > 0.0)) {
        throw std::domain_error("group velocity must be positive");
    }
    const auto& ks = packet.k_grid();
    const auto& amps = packet.amplitudes();
    double sum = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        sum += std::norm(amps[i]) * ks[i] * packet.dispersion()(ks[i]);
    }
    return sum * packet.k_spacing() * 0.5 * tension / group_velocity;
}

MomentumWaveFunction to_momentum_representation(const SpectralWavePacket& packet) {
    const double hbar = constants::hbar;
    const double inv_sqrt_hbar = 1.0 / std::sqrt(hbar);
    MomentumWaveFunction out;
    out.p_grid.resize(packet.k_grid().size());
    out.values.resize(packet.k_grid().size());
    for (std::size_t i = 0; i < packet.k_grid().size(); ++i) {
        out.p_grid[i] = hbar * packet.k_grid()[i];
        out.values[i] = packet.amplitudes()[i] * inv_sqrt_hbar;
    }
    return out;
}

UncertaintyResult uncertainty_product(const PositionWaveFunction& wavefn,
                                      const SpectralWavePacket& packet) {
    grid_spacing(wavefn.x_grid, "x");
    if (wavefn.values.size() != wavefn.x_grid.size()) {
        throw std::domain_error("wavefunction values must match its grid");
    }

    const auto moments = [](const std::vector<double>& grid,
                            const auto& weight_of) {
        double w_sum = 0.0;
        double mean = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double w = weight_of(i);
            w_sum += w;
            mean += w * grid[i];
        }
        if (w_sum == 0.0) {
            throw std::domain_error("zero-norm state has no uncertainty");
        }
        mean /= w_sum;
        double var = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double dev = grid[i] - mean;
            var += weight_of(i) * dev * dev;
        }
        return std::sqrt(var / w_sum);
    };

    const double delta_x = moments(
        wavefn.x_grid, [&](std::size_t i) { return std::norm(wavefn.values[i]); });
    const double delta_k = moments(packet.k_grid(), [&](std::size_t i) {
        return std::norm(packet.amplitudes()[i]);
    });
    const double delta_p = constants::hbar * delta_k;
    return {delta_x, delta_p, delta_x * delta_p};
}

SpectralWavePacket gaussian_packet(double k_center, double sigma_k, double scale,
                                   double k_max, std::size_t n,
                                   DispersionRelation dispersion) {
    if (!(sigma_k > 0.0)) {
        throw std::invalid_argument("sigma_k must be positive");
    }
    std::vector<double> ks = symmetric_k_grid(k_max, n);
    const double dk = ks[1] - ks[0];
    std::vector<Complex> amps(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(ks[i]) < 0.25 * dk) {
            amps[i] = 0.0;
            continue;
        }
        const double dev = ks[i] - k_center;
        amps[i] = scale * std::exp(-dev * dev / (4.0 * sigma_k * sigma_k));
    }
    return SpectralWavePacket(std::move(ks), std::move(amps),
                              std::move(dispersion));
}

} // namespace vlab::packet
