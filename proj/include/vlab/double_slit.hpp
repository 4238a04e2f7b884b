#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "vlab/wavepacket.hpp"

namespace vlab::slits {

using Complex = std::complex<double>;

/// Two slits at y = +-D, screen at x = L, particle with energy uncertainty
/// delta_E and Lorentz factor gamma; wavelength feeds the pattern generator.
class SlitScenario {
public:
    SlitScenario(double half_separation, double screen_distance,
                 double energy_uncertainty, double gamma, double wavelength);

    double half_separation() const { return half_separation_; }
    double screen_distance() const { return screen_distance_; }
    double energy_uncertainty() const { return energy_uncertainty_; }
    double gamma() const { return gamma_; }
    double wavelength() const { return wavelength_; }

    /// The small-angle estimates assume a strongly relativistic particle;
    /// below gamma = 10 they are still evaluable but callers should warn.
    bool relativistic_regime() const { return gamma_ >= 10.0; }

private:
    double half_separation_;
    double screen_distance_;
    double energy_uncertainty_;
    double gamma_;
    double wavelength_;
};

/// Truncated internal-space mode expansion. Callers supply evaluators
/// A_n(k, D) for n >= 0 only; A_{-n} = A_{+n} is built in, which is what
/// keeps the interference real on the y axis.
class ModeExpansion {
public:
    using Coefficient = std::function<Complex(double k, double half_separation)>;

    ModeExpansion(std::vector<Coefficient> coefficients, double half_separation);

    /// Default family A_n = exp(-|n|), independent of k and D.
    static ModeExpansion exponential_family(int n_max, double half_separation);

    int n_max() const { return static_cast<int>(coefficients_.size()) - 1; }
    double half_separation() const { return half_separation_; }
    Complex coefficient(int n, double k) const;

private:
    std::vector<Coefficient> coefficients_;
    double half_separation_;
};

/// sum_{n=-n_max}^{n_max} A_n(k, D) e^{i n theta}, evaluated in the
/// explicitly even form A_0 + 2 sum_{n>=1} A_n cos(n theta).
Complex mode_coefficient_sum(const ModeExpansion& expansion, double k,
                             double theta);

/// Quadrature form of the perturbation sum:
///   sum_k [sum_n A_n(k, D) e^{i n theta}] e^{i (k x - omega(k) t)} dk,
/// with grid and dispersion taken from the packet.
Complex evaluate_mode_sum(const ModeExpansion& expansion,
                          const packet::SpectralWavePacket& packet, double x,
                          double theta, double t);

/// Maximum deflection estimate hbar c / (2 D delta_E).
double phi_max(const SlitScenario& s);

/// Screen-position uncertainty +-L hbar c / (2 D delta_E), both signs:
/// which slit was crossed is unknowable, so the distribution is symmetric.
std::pair<double, double> delta_y(const SlitScenario& s);

/// Two-path far-field intensity |e^{i k r+}/sqrt(r+) + e^{i k r-}/sqrt(r-)|^2
/// with r+- = sqrt(L^2 + (y -+ D)^2), multiplied by a Gaussian envelope of
/// half-width-at-half-maximum |delta_y| and normalized to max 1.
/// Requires the far field, L > 10 D.
std::vector<double> interference_pattern(const SlitScenario& s,
                                         const std::vector<double>& y_grid);

} // namespace vlab::slits
