#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace vlab::packet {

using Complex = std::complex<double>;

/// Black-box omega(k) evaluator. Packets sample it on their k grid and
/// reject evaluators that break the propagation-direction condition
/// (omega >= 0 for k >= 0, <= 0 for k <= 0, omega(0) = 0) or that jump
/// discontinuously between adjacent samples.
class DispersionRelation {
public:
    DispersionRelation(std::function<double(double)> omega, std::string tag);

    double operator()(double k) const { return omega_(k); }
    const std::string& tag() const { return tag_; }

    static DispersionRelation linear(double speed);
    /// omega = coefficient * k^2 * sign(k); for a massive particle the
    /// coefficient is hbar/(2m).
    static DispersionRelation quadratic(double coefficient);
    static DispersionRelation cubic(double speed, double beta);

private:
    std::function<double(double)> omega_;
    std::string tag_;
};

std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// n uniformly spaced k values covering [-k_max, k_max]. Odd n puts a
/// sample exactly at k = 0.
std::vector<double> symmetric_k_grid(double k_max, std::size_t n);

/// Zero-centered x grid with dx dk = 2 pi / N, the spacing for which
/// synthesis and analysis are exact inverses (and FFT-accelerable).
std::vector<double> conjugate_x_grid(const std::vector<double>& k_grid);

/// Sampled spectral amplitude A(k) with its dispersion. Construction
/// validates: uniform symmetric grid, finite square-summable amplitudes,
/// A(0) = 0 when k = 0 is on the grid, and the dispersion invariants.
class SpectralWavePacket {
public:
    SpectralWavePacket(std::vector<double> k_grid, std::vector<Complex> amplitudes,
                       DispersionRelation dispersion);

    const std::vector<double>& k_grid() const { return k_grid_; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const DispersionRelation& dispersion() const { return dispersion_; }

    double k_spacing() const { return k_spacing_; }
    /// sum |A|^2 dk.
    double norm_squared() const;
    /// k-bar = sum k |A|^2 dk / sum |A|^2 dk. Throws on a zero packet.
    double spectral_centroid() const;

private:
    std::vector<double> k_grid_;
    std::vector<Complex> amplitudes_;
    DispersionRelation dispersion_;
    double k_spacing_;
};

struct PositionWaveFunction {
    std::vector<double> x_grid;
    std::vector<Complex> values;
    double time{0.0};
};

struct MomentumWaveFunction {
    std::vector<double> p_grid;
    std::vector<Complex> values;
};

/// F(x,t) = (1/sqrt(2 pi)) sum_k A(k) exp(i [k x - omega(k) t]) dk.
/// Uses a radix-2 FFT when the grids are conjugate and power-of-two sized,
/// the explicit sum otherwise; both paths agree to round-off.
PositionWaveFunction synthesize(const SpectralWavePacket& packet,
                                const std::vector<double>& x_grid, double t);

/// Explicit-sum reference path, kept callable as the correctness oracle for
/// the accelerated route.
PositionWaveFunction synthesize_direct(const SpectralWavePacket& packet,
                                       const std::vector<double>& x_grid,
                                       double t);

/// G(k) = (1/sqrt(2 pi)) sum_x F(x,t) exp(-i [k x - omega(k) t]) dx,
/// the inverse of synthesize on conjugate grids.
SpectralWavePacket analyze(const PositionWaveFunction& wavefn,
                           const std::vector<double>& k_grid,
                           const DispersionRelation& dispersion);

SpectralWavePacket analyze_direct(const PositionWaveFunction& wavefn,
                                  const std::vector<double>& k_grid,
                                  const DispersionRelation& dispersion);

struct ParsevalResult {
    double norm_k;
    double norm_x;
    double relative_gap; // 0 by convention when both norms vanish
};

ParsevalResult parseval_check(const SpectralWavePacket& packet,
                              const PositionWaveFunction& wavefn);

/// d omega/d k at the spectral centroid (central difference, step = dk).
double group_velocity(const SpectralWavePacket& packet);

/// (1/v_g) (S/2) sum |A(k)|^2 k omega(k) dk. Non-negative under the
/// dispersion sign condition.
double total_energy(const SpectralWavePacket& packet, double tension,
                    double group_velocity);

/// Scale transformation to momentum space: P = hbar k,
/// psi(P) = A(P/hbar)/sqrt(hbar); the L^2 norm is preserved.
MomentumWaveFunction to_momentum_representation(const SpectralWavePacket& packet);

struct UncertaintyResult {
    double delta_x; // std of x under normalized |F|^2
    double delta_p; // std of P = hbar k under normalized |A|^2
    double product;
};

UncertaintyResult uncertainty_product(const PositionWaveFunction& wavefn,
                                      const SpectralWavePacket& packet);

/// A(k) = scale exp(-(k - k_center)^2 / (4 sigma_k^2)) sampled on a
/// symmetric grid of n points covering [-k_max, k_max]; the k = 0 bin is
/// zeroed to honor the A(0) = 0 invariant.
SpectralWavePacket gaussian_packet(double k_center, double sigma_k, double scale,
                                   double k_max, std::size_t n,
                                   DispersionRelation dispersion);

} // namespace vlab::packet
