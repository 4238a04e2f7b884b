#include "vlab/double_slit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vlab/constants.hpp"

namespace vlab::slits {

SlitScenario::SlitScenario(double half_separation, double screen_distance,
                           double energy_uncertainty, double gamma,
                           double wavelength)
    : half_separation_(half_separation), screen_distance_(screen_distance),
      energy_uncertainty_(energy_uncertainty), gamma_(gamma),
      wavelength_(wavelength) {
    if (!(half_separation_ > 0.0) || !(screen_distance_ > 0.0) ||
        !(energy_uncertainty_ > 0.0) || !(wavelength_ > 0.0)) {
        throw std::domain_error("D, L, delta_E and wavelength must be positive");
    }
    if (!(gamma_ >= 1.0)) {
        throw std::domain_error("gamma must be >= 1");
    }
}

ModeExpansion::ModeExpansion(std::vector<Coefficient> coefficients,
                             double half_separation)
    : coefficients_(std::move(coefficients)), half_separation_(half_separation) {
    if (coefficients_.empty()) {
        throw std::invalid_argument("mode expansion needs at least A_0");
    }
    if (!(half_separation_ > 0.0)) {
        throw std::invalid_argument("slit half-separation must be positive");
    }
    for (const auto& c : coefficients_) {
        if (!c) {
            throw std::invalid_argument("every coefficient must be callable");
        }
    }
}

ModeExpansion ModeExpansion::exponential_family(int n_max,
                                                double half_separation) {
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be non-negative");
    }
    std::vector<Coefficient> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double value = std::exp(-static_cast<double>(n));
        coeffs.push_back([value](double, double) { return Complex(value, 0.0); });
    }
    return ModeExpansion(std::move(coeffs), half_separation);
}

Complex ModeExpansion::coefficient(int n, double k) const {
    const auto idx = static_cast<std::size_t>(std::abs(n));
    if (idx >= coefficients_.size()) {
        throw std::out_of_range("mode index beyond truncation");
    }
    return coefficients_[idx](k, half_separation_);
}

Complex mode_coefficient_sum(const ModeExpansion& expansion, double k,
                             double theta) {
    // A_{+n} = A_{-n} pairs into A_0 + 2 sum A_n cos(n theta), manifestly
    // even in theta and real whenever the A_n are real.
    Complex sum = expansion.coefficient(0, k);
    for (int n = 1; n <= expansion.n_max(); ++n) {
        sum += 2.0 * std::cos(static_cast<double>(n) * theta) *
               expansion.coefficient(n, k);
    }
    return sum;
}

Complex evaluate_mode_sum(const ModeExpansion& expansion,
                          const packet::SpectralWavePacket& packet, double x,
                          double theta, double t) {
    const auto& ks = packet.k_grid();
    Complex total(0.0, 0.0);
    for (double k : ks) {
        const Complex inner = mode_coefficient_sum(expansion, k, theta);
        const double phase = k * x - packet.dispersion()(k) * t;
        total += inner * std::polar(1.0, phase);
    }
    return total * packet.k_spacing();
}

double phi_max(const SlitScenario& s) {
    return constants::hbar * constants::c_light /
           (2.0 * s.half_separation() * s.energy_uncertainty());
}

std::pair<double, double> delta_y(const SlitScenario& s) {
    const double dy = s.screen_distance() * phi_max(s);
    return {dy, -dy};
}

std::vector<double> interference_pattern(const SlitScenario& s,
                                         const std::vector<double>& y_grid) {
    if (!(s.screen_distance() > 10.0 * s.half_separation())) {
        throw std::domain_error("far field requires L > 10 D");
    }
    const double k = 2.0 * std::numbers::pi / s.wavelength();
    const double L2 = s.screen_distance() * s.screen_distance();
    const double d = s.half_separation();
    const double envelope_halfwidth = delta_y(s).first;
    const double ln2 = std::numbers::ln2;

    std::vector<double> intensity(y_grid.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < y_grid.size(); ++i) {
        const double y = y_grid[i];
        const double r_plus = std::sqrt(L2 + (y - d) * (y - d));
        const double r_minus = std::sqrt(L2 + (y + d) * (y + d));
        const Complex amp = std::polar(1.0 / std::sqrt(r_plus), k * r_plus) +
                            std::polar(1.0 / std::sqrt(r_minus), k * r_minus);
        const double u = y / envelope_halfwidth;
        intensity[i] = std::norm(amp) * std::exp(-ln2 * u * u);
        peak = std::max(peak, intensity[i]);
    }
    if (peak > 0.0) {
        for (double& v : intensity) {
            v /= peak;
        }
    }
    return intensity;
}

} // namespace vlab::slits
