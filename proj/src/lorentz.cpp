#include "vlab/lorentz.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vlab/constants.hpp"

namespace vlab::lorentz {

namespace {

// Division guard for ratio reports: below this a component counts as zero.
constexpr double kComponentFloor = 1e-300;

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

} // namespace

double FourVector::spatial_norm() const {
    return std::sqrt(dot(spatial, spatial));
}

double FourVector::null_residual() const {
    return t * t - dot(spatial, spatial);
}

bool FourVector::is_null(double rel_tol) const {
    const double scale = t * t + dot(spatial, spatial);
    if (scale == 0.0) {
        return true;
    }
    return std::abs(null_residual()) <= rel_tol * scale;
}

FourVector operator*(double scalar, const FourVector& v) {
    return FourVector{scalar * v.t,
                      {scalar * v.spatial[0], scalar * v.spatial[1],
                       scalar * v.spatial[2]}};
}

Boost::Boost(const std::array<double, 3>& beta) : beta_(beta) {
    beta_mag_ = std::sqrt(dot(beta, beta));
    if (!(beta_mag_ < 1.0)) {
        throw std::domain_error("boost velocity must satisfy |beta| < 1");
    }
    gamma_ = 1.0 / std::sqrt(1.0 - beta_mag_ * beta_mag_);
}

Boost Boost::inverse() const {
    return Boost({-beta_[0], -beta_[1], -beta_[2]});
}

FourVector apply_boost(const FourVector& v, const Boost& b) {
    const double beta = b.beta_magnitude();
    if (beta == 0.0) {
        return v;
    }
    const std::array<double, 3> nhat{b.beta()[0] / beta, b.beta()[1] / beta,
                                     b.beta()[2] / beta};
    const double v_par = dot(v.spatial, nhat);
    const double gamma = b.gamma();

    FourVector out;
    out.t = gamma * (v.t - beta * v_par);
    const double par_prime = gamma * (v_par - beta * v.t);
    for (int i = 0; i < 3; ++i) {
        out.spatial[i] = v.spatial[i] + (par_prime - v_par) * nhat[i];
    }
    return out;
}

RatioReport ratio_invariance_check(const FourVector& k, const FourVector& p,
                                   std::span<const Boost> boosts) {
    constexpr double null_tol = 1e-9;
    if (!k.is_null(null_tol) || !p.is_null(null_tol)) {
        throw std::domain_error("ratio check requires null four-vectors");
    }
    // Spatially parallel: vanishing cross product relative to the norms.
    const auto& ks = k.spatial;
    const auto& ps = p.spatial;
    const std::array<double, 3> cross{ks[1] * ps[2] - ks[2] * ps[1],
                                      ks[2] * ps[0] - ks[0] * ps[2],
                                      ks[0] * ps[1] - ks[1] * ps[0]};
    const double cross_norm =
        std::sqrt(cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]);
    const double scale = k.spatial_norm() * p.spatial_norm();
    if (scale == 0.0 || cross_norm > 1e-9 * scale) {
        throw std::domain_error("ratio check requires p parallel to k");
    }

    RatioReport report;
    report.min_ratio = std::numeric_limits<double>::infinity();
    report.max_ratio = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    std::size_t kept = 0;

    for (std::size_t b = 0; b < boosts.size(); ++b) {
        const FourVector kp = apply_boost(k, boosts[b]);
        const FourVector pp = apply_boost(p, boosts[b]);
        const std::array<double, 4> kc{kp.t, kp.spatial[0], kp.spatial[1],
                                       kp.spatial[2]};
        const std::array<double, 4> pc{pp.t, pp.spatial[0], pp.spatial[1],
                                       pp.spatial[2]};
        for (int mu = 0; mu < 4; ++mu) {
            RatioEntry entry{b, mu, kc[mu], pc[mu], 0.0, false};
            if (std::abs(kc[mu]) < kComponentFloor) {
                entry.skipped = true;
                ++report.skipped_count;
            } else {
                entry.ratio = pc[mu] / kc[mu];
                report.min_ratio = std::min(report.min_ratio, entry.ratio);
                report.max_ratio = std::max(report.max_ratio, entry.ratio);
                sum += entry.ratio;
                ++kept;
            }
            report.entries.push_back(entry);
        }
    }

    if (kept == 0) {
        report.min_ratio = report.max_ratio = report.mean_ratio = 0.0;
        report.max_relative_spread = 0.0;
        return report;
    }
    report.mean_ratio = sum / static_cast<double>(kept);
    const double denom = std::abs(report.mean_ratio);
    report.max_relative_spread =
        denom > 0.0 ? (report.max_ratio - report.min_ratio) / denom : 0.0;
    return report;
}

namespace {

double contraction_factor(double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw std::domain_error("beta must lie in [0, 1)");
    }
    return std::sqrt(1.0 - beta * beta);
}

} // namespace

double time_dilation(double beta, double t_proper) {
    return t_proper * contraction_factor(beta);
}

double length_contraction(double beta, double length_proper) {
    return length_proper * contraction_factor(beta);
}

double relativistic_energy(double mass_kg, double momentum_si) {
    if (mass_kg < 0.0 || momentum_si < 0.0) {
        throw std::domain_error("mass and momentum must be non-negative");
    }
    const double c = constants::c_light;
    const double mc2 = mass_kg * c * c;
    const double pc = momentum_si * c;
    return std::sqrt(mc2 * mc2 + pc * pc);
}

} // namespace vlab::lorentz
