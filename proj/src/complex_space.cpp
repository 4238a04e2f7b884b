#include "vlab/complex_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab::cspace {

double absolute_length(const InternalComplexPoint& p) {
    double sum = 0.0;
    for (int a = 0; a < 3; ++a) {
        sum += p.real_part[a] * p.real_part[a] + p.imag_part[a] * p.imag_part[a];
    }
    return std::sqrt(sum);
}

namespace {

double wrap_angle(double theta) {
    // Reduce to [-pi, pi).
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(theta, two_pi); // (-pi, pi]
    if (r == std::numbers::pi) {
        r = -std::numbers::pi;
    }
    return r;
}

} // namespace

RotationAngles::RotationAngles(double theta_x, double theta_y, double theta_z)
    : theta_{wrap_angle(theta_x), wrap_angle(theta_y), wrap_angle(theta_z)} {}

InternalComplexPoint u1_rotate(const InternalComplexPoint& p,
                               const RotationAngles& angles) {
    InternalComplexPoint out;
    for (std::size_t a = 0; a < 3; ++a) {
        const double c = std::cos(angles.theta(a));
        const double s = std::sin(angles.theta(a));
        out.real_part[a] = p.real_part[a] * c - p.imag_part[a] * s;
        out.imag_part[a] = p.real_part[a] * s + p.imag_part[a] * c;
    }
    return out;
}

namespace {

void check_clear_of_singularities(const ComplexScalarField& field,
                                  const PlaneRegion& region, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("grid spacing must be positive");
    }
    if (!(region.x_min < region.x_max) || !(region.xi_min < region.xi_max)) {
        throw std::invalid_argument("region must have positive extent");
    }
    for (const Complex& s : field.singularities) {
        // Distance from the singularity to the rectangle.
        const double dx = std::max({region.x_min - s.real(), 0.0,
                                    s.real() - region.x_max});
        const double dxi = std::max({region.xi_min - s.imag(), 0.0,
                                     s.imag() - region.xi_max});
        if (std::hypot(dx, dxi) < 2.0 * h) {
            throw std::domain_error(
                "region must stay at least 2h away from singularities of " +
                field.label);
        }
    }
}

struct GridSpec {
    std::size_t nx;
    std::size_t nxi;
};

GridSpec region_grid(const PlaneRegion& region, double h) {
    const auto count = [h](double lo, double hi) {
        return static_cast<std::size_t>(std::floor((hi - lo) / h + 1e-9)) + 1;
    };
    return {count(region.x_min, region.x_max),
            count(region.xi_min, region.xi_max)};
}

} // namespace

double cauchy_riemann_residual(const ComplexScalarField& field,
                               const PlaneRegion& region, double h) {
    check_clear_of_singularities(field, region, h);
    const GridSpec grid = region_grid(region, h);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.nx; ++i) {
        const double x = region.x_min + static_cast<double>(i) * h;
        for (std::size_t j = 0; j < grid.nxi; ++j) {
            const double xi = region.xi_min + static_cast<double>(j) * h;
            const Complex fxp = field.f({x + h, xi});
            const Complex fxm = field.f({x - h, xi});
            const Complex fip = field.f({x, xi + h});
            const Complex fim = field.f({x, xi - h});
            const double du_dx = (fxp.real() - fxm.real()) / (2.0 * h);
            const double dv_dx = (fxp.imag() - fxm.imag()) / (2.0 * h);
            const double du_dxi = (fip.real() - fim.real()) / (2.0 * h);
            const double dv_dxi = (fip.imag() - fim.imag()) / (2.0 * h);
            const double residual =
                std::abs(du_dx - dv_dxi) + std::abs(du_dxi + dv_dx);
            worst = std::max(worst, residual);
        }
    }
    return worst;
}

double harmonicity_residual(const ComplexScalarField& field,
                            const PlaneRegion& region, double h) {
    check_clear_of_singularities(field, region, h);
    const GridSpec grid = region_grid(region, h);
    double worst_u = 0.0;
    double worst_v = 0.0;
    for (std::size_t i = 0; i < grid.nx; ++i) {
        const double x = region.x_min + static_cast<double>(i) * h;
        for (std::size_t j = 0; j < grid.nxi; ++j) {
            const double xi = region.xi_min + static_cast<double>(j) * h;
            const Complex fc = field.f({x, xi});
            const Complex lap = (field.f({x + h, xi}) + field.f({x - h, xi}) +
                                 field.f({x, xi + h}) + field.f({x, xi - h}) -
                                 4.0 * fc) /
                                (h * h);
            worst_u = std::max(worst_u, std::abs(lap.real()));
            worst_v = std::max(worst_v, std::abs(lap.imag()));
        }
    }
    return worst_u + worst_v;
}

Complex sheet_potential(double sigma, Complex xi) {
    const double alpha = 2.0 * std::numbers::pi * sigma;
    return -alpha * xi;
}

Complex point_charge_potential(double charge, Complex xi) {
    if (xi == Complex(0.0, 0.0)) {
        throw std::domain_error("point-charge potential is singular at xi = 0");
    }
    return charge / xi;
}

ComplexScalarField make_sheet_field(double sigma) {
    return {[sigma](Complex xi) { return sheet_potential(sigma, xi); },
            {},
            "sheet"};
}

ComplexScalarField make_point_charge_field(double charge) {
    return {[charge](Complex xi) { return point_charge_potential(charge, xi); },
            {Complex(0.0, 0.0)},
            "point_charge"};
}

ComplexScalarField make_conjugate_field() {
    return {[](Complex xi) { return std::conj(xi); }, {}, "conjugate"};
}

ComplexScalarField make_abs_squared_field() {
    return {[](Complex xi) { return Complex(std::norm(xi), 0.0); },
            {},
            "abs_squared"};
}

double scaled_vacuum_potential(double gamma, double phi0) {
    if (!(gamma >= 1.0)) {
        throw std::domain_error("gamma must be >= 1");
    }
    return gamma * std::abs(phi0);
}

double length_element(double h_real, double h_imag) {
    if (h_real < 0.0 || h_imag < 0.0) {
        throw std::domain_error("grid spacings must be non-negative");
    }
    if (h_real == 0.0 && h_imag == 0.0) {
        throw std::domain_error("length element must be positive");
    }
    return std::hypot(h_real, h_imag);
}

double surface_element(double dl_x, double dl_y) {
    if (!(dl_x > 0.0) || !(dl_y > 0.0)) {
        throw std::domain_error("surface element needs positive lengths");
    }
    return dl_x * dl_y;
}

double volume_element(double dl_x, double dl_y, double dl_z) {
    if (!(dl_x > 0.0) || !(dl_y > 0.0) || !(dl_z > 0.0)) {
        throw std::domain_error("volume element needs positive lengths");
    }
    return dl_x * dl_y * dl_z;
}

} // namespace vlab::cspace
