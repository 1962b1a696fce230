#pragma once

#include <limits>
#include <optional>

#include "rydsw/params.hpp"

namespace rydsw {

// vdW level shift produced by a stored gate excitation at a fixed position.
struct GatePotential {
    double gate_position = 0.0;  // Z_j
    double c6 = 0.0;
};

inline constexpr double kInfinitePotential = std::numeric_limits<double>::infinity();

// V(z) = c6 / (Z - z)^6. Within eps_z of the gate the divergence is replaced
// by an infinite-shift marker; chi() maps the marker onto the two-level limit.
double vdw_potential(const GatePotential& pot, double z, double eps_z);

// Switchover distance for the marker, 1e-3 R_b (the rational chi deviates
// from its two-level limit by ~1e-18 there).
double default_eps_z(const MediumParams& params);

// Two-level limit chi = -g / (omega + i gamma/2).
cplx chi_two_level(const MediumParams& params, double omega);

// chi(z) = g (omega - V) / (Omega^2 - (omega - V)(omega + i gamma/2)).
// v may be +-inf (marker) which yields the two-level limit, as does
// omega_c == 0 where the rational form degenerates to 0/0 on resonance.
cplx chi(const MediumParams& params, double v, double omega);

// Partial sums of the small-omega expansion of the two-level susceptibility,
// chi = (2g/gamma) [ i - 2 omega/gamma - 4 i omega^2/gamma^2 + ... ],
// truncated at the requested order (0, 1 or 2).
cplx chi_series(const MediumParams& params, double omega, int order);

// Susceptibility of the medium as seen by one spinwave component. Callable
// as chi(z, omega); pure and thread-safe.
struct ChiModel {
    MediumParams medium;
    std::optional<GatePotential> gate;  // nullopt: V == 0 everywhere
    bool two_level = false;             // strong-blockade analytic limit
    double eps_z = 0.0;

    static ChiModel with_gate(const MediumParams& params, const GatePotential& pot);
    static ChiModel free_medium(const MediumParams& params);
    static ChiModel strong_blockade(const MediumParams& params);

    double potential(double z) const;
    cplx operator()(double z, double omega) const;

    // S~/E~ = -Omega g / (Omega^2 - (omega - V)(omega + i gamma/2)); this
    // factoring stays finite where the textbook -Omega/(omega - V) chi form
    // hits the omega = V grid resonance.
    cplx spin_amplitude_factor(double z, double omega) const;
};

}  // namespace rydsw
