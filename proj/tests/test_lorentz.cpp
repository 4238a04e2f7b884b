#include <doctest.h>

#include <stdexcept>

#include <array>
#include <cmath>
#include <vector>

#include "vlab/constants.hpp"
#include "vlab/lorentz.hpp"
#include "vlab/random.hpp"

using namespace vlab;
using lorentz::Boost;
using lorentz::FourVector;

namespace {

std::array<double, 3> random_direction(rng::SplitMix64& gen) {
    while (true) {
        const double z = gen.uniform(-1.0, 1.0);
        const double phi = gen.uniform(0.0, 2.0 * 3.141592653589793);
        const double s = std::sqrt(1.0 - z * z);
        std::array<double, 3> n{s * std::cos(phi), s * std::sin(phi), z};
        if (std::abs(n[0]) > 0.05 && std::abs(n[1]) > 0.05 &&
            std::abs(n[2]) > 0.05) {
            return n;
        }
    }
}

FourVector random_null(rng::SplitMix64& gen, double scale) {
    const auto n = random_direction(gen);
    return {scale, {scale * n[0], scale * n[1], scale * n[2]}};
}

Boost random_boost(rng::SplitMix64& gen, double beta_max) {
    const auto n = random_direction(gen);
    const double beta = gen.uniform(0.0, beta_max);
    return Boost({beta * n[0], beta * n[1], beta * n[2]});
}

} // namespace

TEST_CASE("identity boost returns the input") {
    const FourVector v{2.0, {1.0, -0.5, 0.25}};
    const Boost none({0.0, 0.0, 0.0});
    const FourVector out = lorentz::apply_boost(v, none);
    CHECK(out.t == v.t);
    CHECK(out.spatial == v.spatial);
}

TEST_CASE("x-boost of a null vector matches the textbook values") {
    // beta = 0.6 along x forces gamma = 1.25, t' = x' = 0.5.
    const FourVector v{1.0, {1.0, 0.0, 0.0}};
    const Boost b({0.6, 0.0, 0.0});
    CHECK(b.gamma() == doctest::Approx(1.25).epsilon(1e-15));
    const FourVector out = lorentz::apply_boost(v, b);
    CHECK(out.t == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(out.spatial[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(out.spatial[1] == 0.0);
    CHECK(out.spatial[2] == 0.0);
    CHECK(std::abs(out.null_residual()) < 1e-14);
}

TEST_CASE("null vectors stay null under random boosts") {
    rng::SplitMix64 gen(11);
    for (int i = 0; i < 100; ++i) {
        const FourVector v = random_null(gen, gen.uniform(0.1, 10.0));
        const Boost b = random_boost(gen, 0.95);
        const FourVector out = lorentz::apply_boost(v, b);
        CHECK(std::abs(out.null_residual()) < 1e-12 * out.t * out.t);
    }
}

TEST_CASE("boost composed with its collinear inverse is the identity") {
    rng::SplitMix64 gen(12);
    for (int i = 0; i < 50; ++i) {
        const FourVector v = random_null(gen, 1.0);
        const Boost b = random_boost(gen, 0.9);
        const FourVector back =
            lorentz::apply_boost(lorentz::apply_boost(v, b), b.inverse());
        CHECK(back.t == doctest::Approx(v.t).epsilon(1e-12));
        for (int a = 0; a < 3; ++a) {
            CHECK(back.spatial[a] ==
                  doctest::Approx(v.spatial[a]).epsilon(1e-12));
        }
    }
}

TEST_CASE("superluminal boost is rejected") {
    CHECK_THROWS_AS(Boost({1.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(Boost({0.8, 0.8, 0.0}), std::domain_error);
}

TEST_CASE("ratio invariance: p = hbar k over 100 seeded boosts") {
    rng::SplitMix64 gen(42);
    const FourVector k = random_null(gen, 1e7);
    const FourVector p = constants::hbar * k;
    std::vector<Boost> boosts;
    for (int i = 0; i < 100; ++i) {
        boosts.push_back(random_boost(gen, 0.95));
    }
    const auto report = lorentz::ratio_invariance_check(k, p, boosts);
    CHECK(report.skipped_count == 0);
    CHECK(report.entries.size() == 400);
    CHECK(report.mean_ratio ==
          doctest::Approx(constants::hbar).epsilon(1e-13));
    CHECK(report.max_relative_spread < 1e-12);
}

TEST_CASE("ratio invariance: p = 2k in the identity frame is exactly 2") {
    rng::SplitMix64 gen(7);
    const FourVector k = random_null(gen, 3.0);
    const FourVector p = 2.0 * k;
    const std::vector<Boost> frames{Boost({0.0, 0.0, 0.0})};
    const auto report = lorentz::ratio_invariance_check(k, p, frames);
    for (const auto& entry : report.entries) {
        CHECK(entry.ratio == 2.0);
    }
    CHECK(report.max_relative_spread == 0.0);
}

TEST_CASE("ratio invariance rejects bad inputs") {
    const FourVector k{1.0, {1.0, 0.0, 0.0}};
    const FourVector p_skew{1.0, {0.0, 1.0, 0.0}};
    const FourVector not_null{1.0, {0.5, 0.0, 0.0}};
    const std::vector<Boost> frames{Boost({0.0, 0.0, 0.0})};
    CHECK_THROWS_AS(lorentz::ratio_invariance_check(k, p_skew, frames),
                    std::domain_error);
    CHECK_THROWS_AS(lorentz::ratio_invariance_check(not_null, k, frames),
                    std::domain_error);
    CHECK_THROWS_AS(lorentz::ratio_invariance_check(k, not_null, frames),
                    std::domain_error);
}

TEST_CASE("time dilation spot values") {
    CHECK(std::abs(lorentz::time_dilation(0.6, 1.0) - 0.8) < 1e-15);
    CHECK(lorentz::time_dilation(0.0, 5.0) == 5.0);
    CHECK(std::abs(lorentz::time_dilation(0.8, 2.0) - 1.2) < 1e-15);
    CHECK_THROWS_AS(lorentz::time_dilation(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(lorentz::time_dilation(-0.1, 1.0), std::domain_error);
}

TEST_CASE("length contraction spot values") {
    CHECK(std::abs(lorentz::length_contraction(0.8, 1.0) - 0.6) < 1e-15);
    CHECK(lorentz::length_contraction(0.0, 3.5) == 3.5);
    CHECK(std::abs(lorentz::length_contraction(0.6, 10.0) - 8.0) < 1e-14);
    CHECK_THROWS_AS(lorentz::length_contraction(1.2, 1.0), std::domain_error);
}

TEST_CASE("dilation factor agrees with the boost gamma") {
    rng::SplitMix64 gen(5);
    for (int i = 0; i < 20; ++i) {
        const double beta = gen.uniform(0.0, 0.99);
        const Boost b({beta, 0.0, 0.0});
        const double factor = lorentz::time_dilation(beta, 1.0);
        CHECK(factor * b.gamma() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(lorentz::length_contraction(beta, 1.0) ==
              doctest::Approx(factor).epsilon(1e-15));
    }
}

TEST_CASE("relativistic energy limits and invariant mass") {
    const double c = constants::c_light;
    CHECK(lorentz::relativistic_energy(2.0, 0.0) ==
          doctest::Approx(2.0 * c * c).epsilon(1e-15));
    CHECK(lorentz::relativistic_energy(0.0, 3.0) ==
          doctest::Approx(3.0 * c).epsilon(1e-15));
    CHECK_THROWS_AS(lorentz::relativistic_energy(-1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(lorentz::relativistic_energy(1.0, -1.0), std::domain_error);

    // M = 1, beta = 0.6: p = M gamma beta c and E = 1.25 c^2.
    const double gamma = 1.25;
    const double p = 1.0 * gamma * 0.6 * c;
    const double e = lorentz::relativistic_energy(1.0, p);
    CHECK(e == doctest::Approx(gamma * c * c).epsilon(1e-13));

    rng::SplitMix64 gen(9);
    for (int i = 0; i < 100; ++i) {
        const double mass = gen.uniform(1e-3, 10.0);
        const double beta = gen.uniform(0.0, 0.99);
        const double g = 1.0 / std::sqrt(1.0 - beta * beta);
        const double mom = mass * g * beta * c;
        const double energy = lorentz::relativistic_energy(mass, mom);
        const double invariant = energy * energy - mom * mom * c * c;
        const double expected = mass * mass * c * c * c * c;
        CHECK(invariant == doctest::Approx(expected).epsilon(1e-12));
    }
}
