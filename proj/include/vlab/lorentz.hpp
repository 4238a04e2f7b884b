#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace vlab::lorentz {

/// Four-vector (t, x, y, z) with the time component carrying the same units
/// as the spatial ones, i.e. (ct, x), (omega/c, k) or (E/c, p).
struct FourVector {
    double t{0.0};
    std::array<double, 3> spatial{0.0, 0.0, 0.0};

    double spatial_norm() const;
    /// t^2 - |spatial|^2; zero for light-like vectors.
    double null_residual() const;
    bool is_null(double rel_tol = 1e-9) const;
};

FourVector operator*(double scalar, const FourVector& v);

/// Frame velocity in units of c. Rejects |beta| >= 1; gamma is always
/// derived from beta, never stored separately.
class Boost {
public:
    explicit Boost(const std::array<double, 3>& beta);

    const std::array<double, 3>& beta() const { return beta_; }
    double beta_magnitude() const { return beta_mag_; }
    double gamma() const { return gamma_; }
    Boost inverse() const;

private:
    std::array<double, 3> beta_;
    double beta_mag_;
    double gamma_;
};

/// Parallel/perpendicular split along beta:
///   t' = gamma (t - beta.v),  v_par' = gamma (v_par - |beta| t),  v_perp' = v_perp.
/// Null vectors map to null vectors.
FourVector apply_boost(const FourVector& v, const Boost& b);

struct RatioEntry {
    std::size_t boost_index;
    int component; // 0 = time, 1..3 = spatial
    double k_component;
    double p_component;
    double ratio;  // p'/k', meaningless when skipped
    bool skipped;  // |k'| fell below the division guard
};

struct RatioReport {
    std::vector<RatioEntry> entries;
    double min_ratio{0.0};
    double max_ratio{0.0};
    double mean_ratio{0.0};
    double max_relative_spread{0.0}; // (max - min) / |mean|
    std::size_t skipped_count{0};
};

/// Component-wise ratios p'_mu / k'_mu in every frame reached by `boosts`.
/// Requires k and p null and spatially parallel. Components with
/// |k'_mu| < 1e-300 are skipped and counted instead of divided.
RatioReport ratio_invariance_check(const FourVector& k, const FourVector& p,
                                   std::span<const Boost> boosts);

/// Moving-clock reading: t_proper * sqrt(1 - beta^2).
double time_dilation(double beta, double t_proper);

/// Moving-rod length: length_proper * sqrt(1 - beta^2).
double length_contraction(double beta, double length_proper);

/// sqrt(M^2 c^4 + p^2 c^2) in SI units.
double relativistic_energy(double mass_kg, double momentum_si);

} // namespace vlab::lorentz
