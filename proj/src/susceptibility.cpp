#include "rydsw/susceptibility.hpp"

#include <cassert>
#include <cmath>

namespace rydsw {

double vdw_potential(const GatePotential& pot, double z, double eps_z) {
    const double d = z - pot.gate_position;
    if (std::abs(d) < eps_z)
        return pot.c6 < 0.0 ? -kInfinitePotential : kInfinitePotential;
    const double d2 = d * d;
    const double d6 = d2 * d2 * d2;
    const double v = pot.c6 / d6;
    if (!std::isfinite(v))
        return pot.c6 < 0.0 ? -kInfinitePotential : kInfinitePotential;
    return v;
}

double default_eps_z(const MediumParams& params) {
    if (params.omega_c == 0.0 || params.c6 == 0.0)
        return 1e-12 * params.length;
    return 1e-3 * blockade_radius(params);
}

cplx chi_two_level(const MediumParams& params, double omega) {
    return -params.g / cplx(omega, 0.5 * params.gamma);
}

cplx chi(const MediumParams& params, double v, double omega) {
    if (std::isinf(v) || params.omega_c == 0.0)
        return chi_two_level(params, omega);
    const double d = omega - v;
    const cplx denom(params.omega_c * params.omega_c - d * omega,
                     -d * 0.5 * params.gamma);
    const cplx out = params.g * d / denom;
    // Passive medium: Im chi = g d^2 (gamma/2) / |denom|^2 >= 0. Sign
    // conventions are the dominant hazard here.
    assert(out.imag() >= -1e-12 * (params.g / params.gamma + 1.0));
    return out;
}

cplx chi_series(const MediumParams& params, double omega, int order) {
    if (order < 0 || order > 2)
        throw ConfigError("chi_series: order must be 0, 1 or 2");
    const double x = omega / params.gamma;
    cplx bracket(0.0, 1.0);
    if (order >= 1) bracket += cplx(-2.0 * x, 0.0);
    if (order >= 2) bracket += cplx(0.0, -4.0 * x * x);
    return 2.0 * params.g / params.gamma * bracket;
}

ChiModel ChiModel::with_gate(const MediumParams& params, const GatePotential& pot) {
    return ChiModel{params, pot, false, default_eps_z(params)};
}

ChiModel ChiModel::free_medium(const MediumParams& params) {
    return ChiModel{params, std::nullopt, false, 0.0};
}

ChiModel ChiModel::strong_blockade(const MediumParams& params) {
    return ChiModel{params, std::nullopt, true, 0.0};
}

double ChiModel::potential(double z) const {
    if (two_level) return kInfinitePotential;
    if (!gate) return 0.0;
    return vdw_potential(*gate, z, eps_z);
}

cplx ChiModel::operator()(double z, double omega) const {
    return chi(medium, potential(z), omega);
}

cplx ChiModel::spin_amplitude_factor(double z, double omega) const {
    const double v = potential(z);
    if (std::isinf(v) || medium.omega_c == 0.0) return cplx(0.0, 0.0);
    const double d = omega - v;
    const cplx denom(medium.omega_c * medium.omega_c - d * omega,
                     -d * 0.5 * medium.gamma);
    return -medium.omega_c * medium.g / denom;
}

}  // namespace rydsw
