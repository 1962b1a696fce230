#pragma once

#include <optional>
#include <vector>

#include "rydsw/common.hpp"

namespace rydsw {

// Physical parameters of the ladder medium, in internal units (frequencies in
// units of the reference decay rate, lengths in micrometers). All types here
// are immutable value types once validated; share freely across threads.
struct MediumParams {
    double gamma = 1.0;    // decay rate of the intermediate state
    double omega_c = 0.0;  // control-field Rabi frequency
    double g = 0.0;        // collective atom-photon coupling, g = sqrt(N) g_s
    std::optional<double> g_single;  // single-atom coupling
    std::optional<double> n_atoms;   // atom count behind the collective g
    double length = 1.0;   // medium length L
    double c6 = 0.0;       // vdW dispersion coefficient (sign allowed)
    double c_light = 1.0;  // vacuum speed of light

    void validate() const;  // throws ConfigError
};

// Gaussian input photon pulse, normalized in space at t = 0:
//   E(z, 0) = (pi c^2 tau^2)^(-1/4) exp[-(z - z0)^2 / (2 c^2 tau^2)]
struct PulseSpec {
    double tau = 1.0;  // temporal duration
    double z0 = 0.0;   // initial center position, well before the medium

    void validate(const MediumParams& medium) const;

    // Default launch distance, far enough that the leading tail at t = 0 is
    // below the solver's window-edge tolerance.
    static double default_z0(const MediumParams& medium, double tau) {
        return -5.5 * medium.c_light * tau;
    }
};

// Delocalized single Rydberg excitation over candidate gate-atom positions.
struct SpinwaveState {
    std::vector<double> positions;  // gate positions, each within [0, L]
    double wavenumber = 0.0;
    std::vector<cplx> weights;      // empty means uniform 1/sqrt(N)

    static SpinwaveState uniform(std::vector<double> positions, double wavenumber = 0.0);

    std::size_t size() const { return positions.size(); }
    cplx weight(std::size_t j) const;
    void validate(const MediumParams& medium) const;
};

// R_b = |gamma C6 / (2 Omega^2)|^(1/6), the distance at which the vdW shift
// and the EIT linewidth scale are equal.
double blockade_radius(const MediumParams& params);

// C6 magnitude that realizes a requested blockade radius.
double c6_for_blockade_radius(const MediumParams& params, double rb);

// alpha = 4 g^2 L / (c gamma), resonant two-level attenuation exponent.
double optical_depth(const MediumParams& params);

// Input pulse in vacuum, E(z, t) = E(z - c t, 0).
cplx gaussian_pulse(const PulseSpec& pulse, double c_light, double z, double t);

// Fourier transform of the boundary signal E(0, t) under the convention
//   f(t) = Int dw e^{-i w t} f~(w),  f~(w) = (1/2pi) Int dt e^{+i w t} f(t):
//   E0~(w) = tau/sqrt(2 pi) (pi c^2 tau^2)^(-1/4) exp(-w^2 tau^2/2 - i w z0/c)
cplx gaussian_pulse_spectrum(const PulseSpec& pulse, double c_light, double omega);

}  // namespace rydsw
