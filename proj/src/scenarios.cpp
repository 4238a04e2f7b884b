#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vlab/complex_space.hpp"
#include "vlab/constants.hpp"
#include "vlab/double_slit.hpp"
#include "vlab/io.hpp"
#include "vlab/lattice.hpp"
#include "vlab/lorentz.hpp"
#include "vlab/random.hpp"
#include "vlab/scenario.hpp"
#include "vlab/wavepacket.hpp"

namespace vlab::cli {
namespace detail {

namespace {

std::filesystem::path with_suffix(const ScenarioConfig& config,
                                  const std::string& suffix) {
    return std::filesystem::path(config.output_path.string() + suffix);
}

nlohmann::json effective_config(const ScenarioConfig& config) {
    return {{"scenario", config.scenario},
            {"seed", config.seed},
            {"parameters", config.parameters}};
}

void add_check(RunReport& report, const std::string& name, bool passed,
               double value, const std::string& detail) {
    report.checks.push_back({name, passed, value, detail});
}

/// Random direction with every component bounded away from zero, so that no
/// boosted component lands near the division guard.
std::array<double, 3> generic_direction(rng::SplitMix64& gen) {
    while (true) {
        const double z = gen.uniform(-1.0, 1.0);
        const double phi = gen.uniform(0.0, 2.0 * std::numbers::pi);
        const double s = std::sqrt(1.0 - z * z);
        std::array<double, 3> n{s * std::cos(phi), s * std::sin(phi), z};
        if (std::abs(n[0]) > 0.1 && std::abs(n[1]) > 0.1 && std::abs(n[2]) > 0.1) {
            return n;
        }
    }
}

/// Mean spacing of local maxima of a sampled curve, refined by parabolic
/// interpolation around each peak.
double peak_spacing(const std::vector<double>& grid,
                    const std::vector<double>& values) {
    std::vector<double> peaks;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (values[i] > values[i - 1] && values[i] >= values[i + 1]) {
            const double denom = values[i - 1] - 2.0 * values[i] + values[i + 1];
            double offset = 0.0;
            if (denom != 0.0) {
                offset = 0.5 * (values[i - 1] - values[i + 1]) / denom;
            }
            const double h = grid[1] - grid[0];
            peaks.push_back(grid[i] + offset * h);
        }
    }
    if (peaks.size() < 2) {
        return 0.0;
    }
    return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

} // namespace

void run_lorentz(const ScenarioConfig& config, RunReport& report) {
    const auto n_boosts =
        config.parameters.at("n_boosts").get<std::size_t>();
    const double beta_max = config.parameters.at("beta_max").get<double>();
    const double k_mag = config.parameters.at("k_magnitude").get<double>();

    rng::SplitMix64 gen(config.seed);
    const auto k_dir = generic_direction(gen);
    const lorentz::FourVector k{
        k_mag, {k_mag * k_dir[0], k_mag * k_dir[1], k_mag * k_dir[2]}};
    const lorentz::FourVector p = constants::hbar * k;

    std::vector<lorentz::Boost> boosts;
    boosts.reserve(n_boosts);
    for (std::size_t i = 0; i < n_boosts; ++i) {
        const auto dir = generic_direction(gen);
        const double beta = gen.uniform(0.0, beta_max);
        boosts.emplace_back(std::array<double, 3>{
            beta * dir[0], beta * dir[1], beta * dir[2]});
    }

    const auto result = lorentz::ratio_invariance_check(k, p, boosts);

    nlohmann::json meta = effective_config(config);
    meta["expected_ratio"] = constants::hbar;
    meta["max_relative_spread"] = result.max_relative_spread;
    meta["skipped_components"] = result.skipped_count;

    const auto path = with_suffix(config, "_ratios.csv");
    io::CsvWriter csv(path, meta,
                      {"boost_index", "beta_x", "beta_y", "beta_z", "component",
                       "k_prime", "p_prime", "ratio"});
    for (const auto& entry : result.entries) {
        if (entry.skipped) {
            continue;
        }
        const auto& beta = boosts[entry.boost_index].beta();
        csv.raw_row({std::to_string(entry.boost_index),
                     io::format_double(beta[0]), io::format_double(beta[1]),
                     io::format_double(beta[2]), std::to_string(entry.component),
                     io::format_double(entry.k_component),
                     io::format_double(entry.p_component),
                     io::format_double(entry.ratio)});
    }
    csv.close();
    report.files_written.push_back(path);

    add_check(report, "ratio_spread_below_1e-12",
              result.max_relative_spread < 1e-12, result.max_relative_spread,
              "max relative spread of p'/k' across frames");
}

void run_space(const ScenarioConfig& config, RunReport& report) {
    const double h0 = config.parameters.at("h0").get<double>();
    const auto n_ref = config.parameters.at("n_refinements").get<std::size_t>();
    const double charge = config.parameters.at("charge").get<double>();
    const double sigma = config.parameters.at("sigma").get<double>();
    const double lo = config.parameters.at("region_min").get<double>();
    const double hi = config.parameters.at("region_max").get<double>();

    const cspace::PlaneRegion region{lo, hi, lo, hi};
    const std::vector<cspace::ComplexScalarField> fields = {
        cspace::make_sheet_field(sigma), cspace::make_point_charge_field(charge)};

    struct Row {
        std::string label;
        double h, cr, lap;
    };
    std::vector<Row> rows;
    std::vector<double> charge_cr;
    std::vector<double> charge_lap;
    for (const auto& field : fields) {
        double h = h0;
        for (std::size_t r = 0; r < n_ref; ++r, h /= 2.0) {
            const double cr = cspace::cauchy_riemann_residual(field, region, h);
            const double lap = cspace::harmonicity_residual(field, region, h);
            rows.push_back({field.label, h, cr, lap});
            if (field.label == "point_charge") {
                charge_cr.push_back(cr);
                charge_lap.push_back(lap);
            }
        }
    }

    const auto measured_order = [](const std::vector<double>& residuals) {
        // log2 slope between the two finest levels.
        const std::size_t n = residuals.size();
        return std::log2(residuals[n - 2] / residuals[n - 1]);
    };
    const double cr_order = measured_order(charge_cr);
    const double lap_order = measured_order(charge_lap);

    nlohmann::json meta = effective_config(config);
    meta["cr_order_point_charge"] = cr_order;
    meta["laplacian_order_point_charge"] = lap_order;

    const auto path = with_suffix(config, "_residuals.csv");
    io::CsvWriter csv(path, meta,
                      {"field", "h", "cr_residual", "laplacian_residual"});
    for (const auto& row : rows) {
        csv.raw_row({row.label, io::format_double(row.h),
                     io::format_double(row.cr), io::format_double(row.lap)});
    }
    csv.close();
    report.files_written.push_back(path);

    add_check(report, "cr_order_in_band",
              cr_order > 1.8 && cr_order < 2.2, cr_order,
              "measured Cauchy-Riemann convergence order of Q/xi");
    add_check(report, "laplacian_order_in_band",
              lap_order > 1.8 && lap_order < 2.2, lap_order,
              "measured Laplacian convergence order of Q/xi");
}

void run_lattice(const ScenarioConfig& config, RunReport& report) {
    const auto n_sites = config.parameters.at("n_sites").get<std::size_t>();
    const double d = config.parameters.at("d").get<double>();
    const double m_e = config.parameters.at("m_e").get<double>();
    const double spring = config.parameters.at("K").get<double>();
    const auto steps = config.parameters.at("steps").get<std::size_t>();
    const auto mode = config.parameters.at("mode").get<std::size_t>();
    double amplitude = config.parameters.at("amplitude").get<double>();
    const auto boundary_name =
        config.parameters.at("boundary").get<std::string>();
    const auto record_every =
        std::max<std::size_t>(1, config.parameters.at("record_every")
                                     .get<std::size_t>());

    lattice::Boundary boundary;
    if (boundary_name == "periodic") {
        boundary = lattice::Boundary::periodic;
    } else if (boundary_name == "fixed") {
        boundary = lattice::Boundary::fixed;
    } else {
        throw UsageError("boundary must be 'periodic' or 'fixed'");
    }

    const lattice::LatticeConfig lat(n_sites, d, m_e, spring, boundary);
    const bool calibrated = amplitude == 0.0;
    if (calibrated) {
        amplitude = lattice::calibrated_amplitude(lat);
    }
    const double model_h = lattice::planck_constant_model(lat, amplitude);

    lattice::LatticeState state =
        lattice::make_standing_mode(lat, mode, amplitude);
    const double dt = lattice::stable_timestep(lat);
    const double e0 = lattice::total_energy(state, lat);

    nlohmann::json meta = effective_config(config);
    meta["calibrated_amplitude"] = calibrated;
    meta["amplitude"] = amplitude;
    meta["dt"] = dt;
    meta["model_planck_constant"] = model_h;
    meta["wave_speed"] = lattice::propagation_speed(lat);

    const auto energy_path = with_suffix(config, "_energy.csv");
    double drift = 0.0;
    {
        io::CsvWriter csv(energy_path, meta,
                          {"step", "time", "energy", "relative_drift"});
        csv.raw_row({"0", io::format_double(state.time), io::format_double(e0),
                     "0"});
        std::size_t done = 0;
        while (done < steps) {
            const std::size_t chunk = std::min(record_every, steps - done);
            lattice::step(state, lat, dt, chunk);
            done += chunk;
            const double e = lattice::total_energy(state, lat);
            drift = std::max(drift, std::abs(e - e0) / e0);
            csv.raw_row({std::to_string(done), io::format_double(state.time),
                         io::format_double(e),
                         io::format_double(std::abs(e - e0) / e0)});
        }
        csv.close();
    }
    report.files_written.push_back(energy_path);

    const auto snapshot_path = with_suffix(config, "_state.csv");
    {
        std::ofstream out(snapshot_path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw io::IoError("cannot open output file: " +
                              snapshot_path.string());
        }
        lattice::write_snapshot(out, state, lat);
        out.flush();
        if (!out) {
            throw io::IoError("write failed: " + snapshot_path.string());
        }
    }
    report.files_written.push_back(snapshot_path);

    add_check(report, "energy_drift_below_1e-6", drift < 1e-6, drift,
              "max |E - E0| / E0 across the run");
    if (calibrated) {
        const double rel =
            std::abs(model_h - constants::h_planck) / constants::h_planck;
        add_check(report, "calibrated_constant_matches_h", rel < 1e-12, rel,
                  "relative gap between the model constant and CODATA h");
    }
}

void run_packet(const ScenarioConfig& config, RunReport& report) {
    const double k0 = config.parameters.at("k0").get<double>();
    const double sigma_k = config.parameters.at("sigma_k").get<double>();
    const auto n_points = config.parameters.at("n_points").get<std::size_t>();
    const double k_max = config.parameters.at("k_max").get<double>();
    const double speed = config.parameters.at("wave_speed").get<double>();
    const auto n_dumps =
        std::max<std::size_t>(1, config.parameters.at("n_dumps")
                                     .get<std::size_t>());
    const double t_max = config.parameters.at("t_max").get<double>();

    const auto packet0 = packet::gaussian_packet(
        k0, sigma_k, 1.0, k_max, n_points, packet::DispersionRelation::linear(speed));
    const auto x_grid = packet::conjugate_x_grid(packet0.k_grid());

    nlohmann::json meta = effective_config(config);

    const auto spectrum_path = with_suffix(config, "_spectrum.csv");
    {
        nlohmann::json m = meta;
        m["kind"] = "spectrum";
        io::CsvWriter csv(spectrum_path, m, {"k", "re", "im", "abs2"});
        for (std::size_t i = 0; i < packet0.k_grid().size(); ++i) {
            const auto a = packet0.amplitudes()[i];
            csv.row({packet0.k_grid()[i], a.real(), a.imag(), std::norm(a)});
        }
        csv.close();
    }
    report.files_written.push_back(spectrum_path);

    double parseval_gap = 0.0;
    double roundtrip = 0.0;
    packet::UncertaintyResult unc{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n_dumps; ++i) {
        const double t = n_dumps == 1
                             ? 0.0
                             : t_max * static_cast<double>(i) /
                                   static_cast<double>(n_dumps - 1);
        const auto wavefn = packet::synthesize(packet0, x_grid, t);
        const auto pv = packet::parseval_check(packet0, wavefn);
        parseval_gap = std::max(parseval_gap, pv.relative_gap);
        if (i == 0) {
            unc = packet::uncertainty_product(wavefn, packet0);
            const auto back = packet::analyze(wavefn, packet0.k_grid(),
                                              packet0.dispersion());
            double num = 0.0;
            double den = 0.0;
            for (std::size_t j = 0; j < back.amplitudes().size(); ++j) {
                num += std::norm(back.amplitudes()[j] - packet0.amplitudes()[j]);
                den += std::norm(packet0.amplitudes()[j]);
            }
            roundtrip = std::sqrt(num / den);
        }

        nlohmann::json m = meta;
        m["kind"] = "wavefunction";
        m["time"] = t;
        const auto path =
            with_suffix(config, "_t" + std::to_string(i) + ".csv");
        io::CsvWriter csv(path, m, {"x", "re", "im", "abs2"});
        for (std::size_t j = 0; j < wavefn.x_grid.size(); ++j) {
            const auto v = wavefn.values[j];
            csv.row({wavefn.x_grid[j], v.real(), v.imag(), std::norm(v)});
        }
        csv.close();
        report.files_written.push_back(path);
    }

    const double target = constants::hbar / 2.0;
    add_check(report, "parseval_gap_below_1e-10", parseval_gap < 1e-10,
              parseval_gap, "worst Parseval gap across dumps");
    add_check(report, "round_trip_below_1e-10", roundtrip < 1e-10, roundtrip,
              "relative L2 error of analyze(synthesize(packet))");
    add_check(report, "uncertainty_product_at_minimum",
              std::abs(unc.product - target) < 1e-6 * target, unc.product,
              "Gaussian preset product vs hbar/2");
}

void run_slits(const ScenarioConfig& config, RunReport& report) {
    const double d = config.parameters.at("D").get<double>();
    const double screen = config.parameters.at("L").get<double>();
    const double delta_e = config.parameters.at("delta_E").get<double>();
    const double gamma = config.parameters.at("gamma").get<double>();
    const double wavelength = config.parameters.at("wavelength").get<double>();
    const double y_max = config.parameters.at("y_max").get<double>();
    const auto n_points = config.parameters.at("n_points").get<std::size_t>();

    const slits::SlitScenario scenario(d, screen, delta_e, gamma, wavelength);
    if (!scenario.relativistic_regime()) {
        report.checks.push_back(
            {"relativistic_regime_warning", true, gamma,
             "warning: gamma < 10, the small-angle estimates assume gamma >> 1"});
    }

    const auto y_grid = packet::uniform_grid(-y_max, y_max, n_points);
    const auto intensity = slits::interference_pattern(scenario, y_grid);

    double evenness = 0.0;
    for (std::size_t i = 0; i < y_grid.size(); ++i) {
        evenness = std::max(
            evenness,
            std::abs(intensity[i] - intensity[y_grid.size() - 1 - i]));
    }

    const double spacing = peak_spacing(y_grid, intensity);
    const double expected_spacing = wavelength * screen / (2.0 * d);
    const auto dy = slits::delta_y(scenario);

    nlohmann::json meta = effective_config(config);
    meta["phi_max"] = slits::phi_max(scenario);
    meta["delta_y_plus"] = dy.first;
    meta["delta_y_minus"] = dy.second;
    meta["expected_fringe_spacing"] = expected_spacing;
    meta["measured_fringe_spacing"] = spacing;

    const auto path = with_suffix(config, "_pattern.csv");
    io::CsvWriter csv(path, meta, {"y", "intensity"});
    for (std::size_t i = 0; i < y_grid.size(); ++i) {
        csv.row({y_grid[i], intensity[i]});
    }
    csv.close();
    report.files_written.push_back(path);

    add_check(report, "pattern_even_below_1e-12", evenness < 1e-12, evenness,
              "max |I(y) - I(-y)| in normalized units");
    add_check(report, "fringe_spacing_within_1pct",
              spacing > 0.0 &&
                  std::abs(spacing - expected_spacing) < 0.01 * expected_spacing,
              spacing, "measured peak spacing vs lambda L / (2D)");
}

} // namespace detail

namespace {

struct QuickCheck {
    std::string name;
    bool passed;
    std::string detail;
};

void emit(std::ostream& out, std::vector<QuickCheck>& all, std::string name,
          bool passed, const std::string& detail) {
    out << (passed ? "PASS  " : "FAIL  ") << name << "  (" << detail << ")\n";
    all.push_back({std::move(name), passed, detail});
}

} // namespace

int run_embedded_checks(std::ostream& out) {
    std::vector<QuickCheck> all;
    rng::SplitMix64 gen(1);

    // Null preservation under random boosts.
    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const auto dir = detail::generic_direction(gen);
            const lorentz::FourVector v{1.0, {dir[0], dir[1], dir[2]}};
            const auto bdir = detail::generic_direction(gen);
            const double beta = gen.uniform(0.0, 0.95);
            const lorentz::Boost b(
                {beta * bdir[0], beta * bdir[1], beta * bdir[2]});
            const auto vp = lorentz::apply_boost(v, b);
            worst = std::max(worst,
                             std::abs(vp.null_residual()) / (vp.t * vp.t));
        }
        emit(out, all, "lorentz_null_preservation", worst < 1e-12,
             "worst |t'^2 - |x'|^2| / t'^2 = " + io::format_double(worst));
    }

    // U(1) rotation preserves the absolute length.
    {
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            cspace::InternalComplexPoint p;
            for (int a = 0; a < 3; ++a) {
                p.real_part[a] = gen.uniform(-5.0, 5.0);
                p.imag_part[a] = gen.uniform(-5.0, 5.0);
            }
            const cspace::RotationAngles angles(gen.uniform(-10.0, 10.0),
                                                gen.uniform(-10.0, 10.0),
                                                gen.uniform(-10.0, 10.0));
            const double before = cspace::absolute_length(p);
            const double after =
                cspace::absolute_length(cspace::u1_rotate(p, angles));
            worst = std::max(worst, std::abs(after - before) / before);
        }
        emit(out, all, "u1_rotation_length_invariance", worst < 1e-12,
             "worst relative length change = " + io::format_double(worst));
    }

    // Cauchy-Riemann convergence order of Q/xi.
    {
        const auto field = cspace::make_point_charge_field(1.0);
        const cspace::PlaneRegion region{1.0, 2.0, 1.0, 2.0};
        const double r1 = cspace::cauchy_riemann_residual(field, region, 0.05);
        const double r2 = cspace::cauchy_riemann_residual(field, region, 0.025);
        const double order = std::log2(r1 / r2);
        emit(out, all, "cauchy_riemann_order_two", order > 1.8 && order < 2.2,
             "measured order = " + io::format_double(order));
    }

    // Lattice energy conservation, mode 1.
    {
        const lattice::LatticeConfig lat(1024, 0.01, 1.0, 1.0);
        auto state = lattice::make_standing_mode(lat, 1, 1e-3);
        const double e0 = lattice::total_energy(state, lat);
        lattice::step(state, lat, lattice::stable_timestep(lat), 2000);
        const double drift =
            std::abs(lattice::total_energy(state, lat) - e0) / e0;
        emit(out, all, "lattice_energy_conservation", drift < 1e-6,
             "relative drift = " + io::format_double(drift));
    }

    // Calibrated amplitude reproduces h.
    {
        const lattice::LatticeConfig lat(64, 1e-10, constants::electron_mass,
                                         1.0);
        const double model = lattice::planck_constant_model(
            lat, lattice::calibrated_amplitude(lat));
        const double rel =
            std::abs(model - constants::h_planck) / constants::h_planck;
        emit(out, all, "planck_calibration_identity", rel < 1e-12,
             "relative gap = " + io::format_double(rel));
    }

    // Fourier round trip and Parseval.
    {
        const auto p = packet::gaussian_packet(
            10.0, 1.0, 1.0, 24.0, 512, packet::DispersionRelation::linear(1.0));
        const auto x = packet::conjugate_x_grid(p.k_grid());
        const auto f = packet::synthesize(p, x, 0.4);
        const auto back = packet::analyze(f, p.k_grid(), p.dispersion());
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < p.amplitudes().size(); ++i) {
            num += std::norm(back.amplitudes()[i] - p.amplitudes()[i]);
            den += std::norm(p.amplitudes()[i]);
        }
        const double rt = std::sqrt(num / den);
        const double gap = packet::parseval_check(p, f).relative_gap;
        emit(out, all, "fourier_round_trip", rt < 1e-10,
             "relative L2 error = " + io::format_double(rt));
        emit(out, all, "parseval_gap", gap < 1e-10,
             "relative gap = " + io::format_double(gap));
    }

    // Minimum-uncertainty Gaussian.
    {
        const auto p = packet::gaussian_packet(
            12.0, 1.0, 1.0, 24.0, 1024, packet::DispersionRelation::linear(1.0));
        const auto x = packet::conjugate_x_grid(p.k_grid());
        const auto f = packet::synthesize(p, x, 0.0);
        const auto unc = packet::uncertainty_product(f, p);
        const double target = constants::hbar / 2.0;
        emit(out, all, "minimum_uncertainty_gaussian",
             std::abs(unc.product - target) < 1e-6 * target,
             "product = " + io::format_double(unc.product));
    }

    // Mode-sum symmetry in theta.
    {
        const auto expansion = slits::ModeExpansion::exponential_family(6, 1e-3);
        const auto p = packet::gaussian_packet(
            10.0, 1.0, 1.0, 24.0, 128, packet::DispersionRelation::linear(1.0));
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double theta = gen.uniform(-3.0, 3.0);
            const auto a = slits::evaluate_mode_sum(expansion, p, 0.3, theta, 0.1);
            const auto b = slits::evaluate_mode_sum(expansion, p, 0.3, -theta, 0.1);
            worst = std::max(worst, std::abs(a - b) / std::abs(a));
        }
        emit(out, all, "mode_sum_even_in_theta", worst < 1e-12,
             "worst relative asymmetry = " + io::format_double(worst));
    }

    // Interference pattern evenness and scaling laws.
    {
        const slits::SlitScenario s(1e-3, 1.0, 1e-26, 100.0, 1e-6);
        const auto y = packet::uniform_grid(-4e-3, 4e-3, 2001);
        const auto intensity = slits::interference_pattern(s, y);
        double evenness = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            evenness = std::max(evenness, std::abs(intensity[i] -
                                                   intensity[y.size() - 1 - i]));
        }
        emit(out, all, "pattern_evenness", evenness < 1e-12,
             "max |I(y) - I(-y)| = " + io::format_double(evenness));

        const double base = slits::phi_max(s) * 1e-3 * 1e-26;
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double dd = gen.uniform(1e-4, 1e-2);
            const double de = gen.uniform(1e-27, 1e-24);
            const slits::SlitScenario sweep(dd, 1.0, de, 100.0, 1e-6);
            const double value = slits::phi_max(sweep) * dd * de;
            worst = std::max(worst, std::abs(value - base) / base);
        }
        emit(out, all, "phi_max_scaling_law", worst < 1e-12,
             "worst relative deviation of phi_max*D*dE = " +
                 io::format_double(worst));
    }

    int failures = 0;
    for (const auto& c : all) {
        if (!c.passed) {
            ++failures;
        }
    }
    out << (failures == 0 ? "all checks passed" : "some checks FAILED") << " ("
        << all.size() - static_cast<std::size_t>(failures) << "/" << all.size()
        << ")\n";
    return failures;
}

} // namespace vlab::cli
