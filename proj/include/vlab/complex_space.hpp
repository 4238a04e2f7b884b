#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace vlab::cspace {

using Complex = std::complex<double>;

/// Point of the three-axis internal complex space: axis a carries the
/// complex coordinate real_part[a] + i imag_part[a].
struct InternalComplexPoint {
    std::array<double, 3> real_part{};
    std::array<double, 3> imag_part{};
};

/// sqrt(x^2 + y^2 + z^2 + xi^2 + yi^2 + zi^2); invariant under u1_rotate.
double absolute_length(const InternalComplexPoint& p);

/// Per-axis rotation angles, normalized to [-pi, pi) on construction.
class RotationAngles {
public:
    RotationAngles(double theta_x, double theta_y, double theta_z);
    double theta(std::size_t axis) const { return theta_[axis]; }

private:
    std::array<double, 3> theta_;
};

/// Rotate each axis by its angle in the internal plane:
///   (a, a_i) -> (a cos - a_i sin, a sin + a_i cos).
InternalComplexPoint u1_rotate(const InternalComplexPoint& p,
                               const RotationAngles& angles);

/// One internal plane: scalar evaluator f(xi) = U + iV plus the points
/// where f is undefined.
struct ComplexScalarField {
    std::function<Complex(Complex)> f;
    std::vector<Complex> singularities;
    std::string label;
};

/// Axis-aligned rectangle in one internal plane (x real, xi imaginary).
struct PlaneRegion {
    double x_min;
    double x_max;
    double xi_min;
    double xi_max;
};

/// max over the grid of |dU/dx - dV/dxi| + |dU/dxi + dV/dx| by central
/// differences with spacing h. The region must stay at least 2h away from
/// every singularity of the field.
double cauchy_riemann_residual(const ComplexScalarField& field,
                               const PlaneRegion& region, double h);

/// max |lap U| + max |lap V| with the five-point stencil, same region rule.
double harmonicity_residual(const ComplexScalarField& field,
                            const PlaneRegion& region, double h);

/// Charged-sheet potential -alpha xi with alpha = 2 pi sigma (cgs Gaussian).
/// This is the x > 0 branch of the real-axis -alpha |x|; the x < 0 branch
/// is +alpha xi, since no single analytic function restricts to |x|.
Complex sheet_potential(double sigma, Complex xi);

/// Point-charge potential Q/xi (cgs Gaussian); reduces to Q/r on the real
/// axis. xi = 0 is singular.
Complex point_charge_potential(double charge, Complex xi);

ComplexScalarField make_sheet_field(double sigma);
ComplexScalarField make_point_charge_field(double charge);
/// Non-analytic control fields for the residual validators.
ComplexScalarField make_conjugate_field();
ComplexScalarField make_abs_squared_field();

/// |Phi| = gamma |Phi_0|: vacuum interaction energy seen from a frame where
/// the vacuum density is boosted by gamma >= 1.
double scaled_vacuum_potential(double gamma, double phi0);

/// Per-axis length element dl = sqrt(dx^2 + dxi^2). One of the spacings may
/// be zero (purely real or purely imaginary grid), both may not.
double length_element(double h_real, double h_imag);
double surface_element(double dl_x, double dl_y);
double volume_element(double dl_x, double dl_y, double dl_z);

} // namespace vlab::cspace
