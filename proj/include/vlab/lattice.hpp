#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace vlab::lattice {

enum class Boundary { periodic, fixed };

/// The equations of motion are identical whether the chain is written with
/// positive mass and potential or with both signs flipped (the flips cancel
/// in the force law). `negative_mass` exists to demonstrate that
/// equivalence; `standard` is the form actually integrated everywhere else.
enum class SignConvention { standard, negative_mass };

/// Mass-spring chain parameters. Tension S = K d and linear density
/// rho = m/d give the propagation speed c = sqrt(S/rho) = d sqrt(K/m).
class LatticeConfig {
public:
    LatticeConfig(std::size_t n_sites, double spacing, double site_mass,
                  double spring_constant, Boundary boundary = Boundary::periodic);

    std::size_t n_sites() const { return n_sites_; }
    double spacing() const { return spacing_; }
    double site_mass() const { return site_mass_; }
    double spring_constant() const { return spring_constant_; }
    Boundary boundary() const { return boundary_; }

    double tension() const { return spring_constant_ * spacing_; }
    double linear_density() const { return site_mass_ / spacing_; }
    double wave_speed() const;
    double total_length() const { return static_cast<double>(n_sites_) * spacing_; }

private:
    std::size_t n_sites_;
    double spacing_;
    double site_mass_;
    double spring_constant_;
    Boundary boundary_;
};

struct LatticeState {
    std::vector<double> q;     // site displacements, m
    std::vector<double> q_dot; // site velocities, m/s
    double time{0.0};
};

LatticeState make_zero_state(const LatticeConfig& config);

/// Standing normal mode of the periodic chain: q_k = A cos(2 pi m k / N),
/// zero initial velocity.
LatticeState make_standing_mode(const LatticeConfig& config,
                                std::size_t mode_index, double amplitude);

/// Exact right-moving solution of the discrete chain at t = 0:
/// q_k = A sin(k x_k), q_dot_k = -omega_d A cos(k x_k) with the discrete
/// dispersion omega_d.
LatticeState make_traveling_wave(const LatticeConfig& config,
                                 std::size_t mode_index, double amplitude);

/// Right-moving Gaussian pulse (d'Alembert initial data q_dot = -c q').
LatticeState make_gaussian_pulse(const LatticeConfig& config,
                                 double center_site, double width_sites,
                                 double amplitude);

/// Largest stable explicit step is d/c; this returns the half-bound default.
double stable_timestep(const LatticeConfig& config);

/// Advance the state by n_steps velocity-Verlet steps of size dt under
/// q_ddot_k = (K/m)(q_{k+1} - 2 q_k + q_{k-1}). Requires dt < d/c.
void step(LatticeState& state, const LatticeConfig& config, double dt,
          std::size_t n_steps,
          SignConvention convention = SignConvention::standard);

/// (1/2) sum m q_dot^2 + (1/2) sum K (q_{k-1} - q_k)^2 including the
/// boundary springs (wall springs for fixed ends, wrap spring for periodic).
double total_energy(const LatticeState& state, const LatticeConfig& config);

/// sqrt(S/rho) = d sqrt(K/m).
double propagation_speed(const LatticeConfig& config);

/// Closed-form dispersion of the discrete chain,
/// omega(k) = 2 sqrt(K/m) |sin(k d / 2)|.
double discrete_dispersion(const LatticeConfig& config, double wavenumber);

double mode_wavenumber(const LatticeConfig& config, std::size_t mode_index);

/// Excite mode_index on the periodic chain, integrate for sim_time, and
/// extract the oscillation frequency from zero crossings of one site's
/// displacement. Throws when fewer than one full period fits in sim_time.
double measured_dispersion(const LatticeConfig& config, std::size_t mode_index,
                           double sim_time);

/// Sinusoidal wave-train parameters; wavelength must be resolvable
/// (lambda > 2d) on the lattice the train is evaluated against.
class WaveTrainSpec {
public:
    WaveTrainSpec(double amplitude, double wavelength);
    double amplitude() const { return amplitude_; }
    double wavelength() const { return wavelength_; }
    double wavenumber() const;

private:
    double amplitude_;
    double wavelength_;
};

/// Time-averaged power of the train: (1/2) k omega S A^2 with omega = c k.
double average_power(const WaveTrainSpec& spec, const LatticeConfig& config);

/// <P>/nu = 2 pi^2 S A^2 / lambda.
double energy_per_wavelength(const WaveTrainSpec& spec,
                             const LatticeConfig& config);

/// Momentum in one wavelength: (1/lambda) [2 pi^2 c A^2 (m/d)].
double photon_momentum(const WaveTrainSpec& spec, const LatticeConfig& config);

/// The model constant p_lambda * lambda = 2 pi^2 m c (A^2 / d). Constant in
/// lambda at fixed amplitude, and equal to Planck's h when the amplitude is
/// calibrated (see calibrated_amplitude).
double planck_constant_model(const LatticeConfig& config, double amplitude);

/// A = sqrt(h d / (2 pi^2 m c)): the amplitude for which
/// planck_constant_model returns CODATA h. Scales as sqrt(d).
double calibrated_amplitude(const LatticeConfig& config);

/// Photon/electron interaction time lambda/c = 1/nu (vacuum c).
double interaction_time(double wavelength);

/// Upper bound h nu on the energy a bound electron can take from one train.
double max_energy_transfer(double frequency);

/// Snapshot export: '#'-prefixed JSON metadata line (config + time), then
/// CSV rows (site_index, q, q_dot).
void write_snapshot(std::ostream& out, const LatticeState& state,
                    const LatticeConfig& config);

} // namespace vlab::lattice
