#include "rydsw/params.hpp"

#include <cmath>
#include <numbers>

namespace rydsw {

namespace {
constexpr double kRelTol = 1e-12;
}

void MediumParams::validate() const {
    if (!(gamma > 0.0)) throw ConfigError("medium: gamma must be > 0");
    if (!(omega_c >= 0.0)) throw ConfigError("medium: omega_c must be >= 0");
    if (!(g >= 0.0)) throw ConfigError("medium: g must be >= 0");
    if (!(length > 0.0)) throw ConfigError("medium: length must be > 0");
    if (!(c_light > 0.0)) throw ConfigError("medium: c_light must be > 0");
    if (!std::isfinite(c6)) throw ConfigError("medium: c6 must be finite");
    if (g_single && n_atoms) {
        const double expected = std::sqrt(*n_atoms) * (*g_single);
        const double scale = std::max(std::abs(expected), std::abs(g));
        if (scale > 0.0 && std::abs(g - expected) > kRelTol * scale)
            throw ConfigError(
                "medium: g inconsistent with sqrt(n_atoms) * g_single");
    }
}

void PulseSpec::validate(const MediumParams& medium) const {
    if (!(tau > 0.0)) throw ConfigError("pulse: tau must be > 0");
    if (!(z0 < 0.0)) throw ConfigError("pulse: z0 must be negative");
    if (std::abs(z0) < 4.0 * medium.c_light * tau)
        throw ConfigError("pulse: |z0| must be at least 4 c tau");
}

SpinwaveState SpinwaveState::uniform(std::vector<double> positions, double wavenumber) {
    SpinwaveState sw;
    sw.positions = std::move(positions);
    sw.wavenumber = wavenumber;
    return sw;
}

cplx SpinwaveState::weight(std::size_t j) const {
    if (weights.empty())
        return cplx(1.0 / std::sqrt(static_cast<double>(positions.size())), 0.0);
    return weights[j];
}

void SpinwaveState::validate(const MediumParams& medium) const {
    if (positions.empty())
        throw ConfigError("spinwave: needs at least one gate position");
    for (double zj : positions)
        if (zj < 0.0 || zj > medium.length)
            throw ConfigError("spinwave: gate position outside medium");
    if (!weights.empty()) {
        if (weights.size() != positions.size())
            throw ConfigError("spinwave: weights/positions size mismatch");
        double norm = 0.0;
        for (const cplx& w : weights) norm += std::norm(w);
        if (std::abs(norm - 1.0) > kRelTol)
            throw ConfigError("spinwave: weights must be normalized");
    }
}

double blockade_radius(const MediumParams& params) {
    if (params.omega_c == 0.0)
        throw ConfigError("blockade radius undefined without control field");
    const double ratio =
        params.gamma * params.c6 / (2.0 * params.omega_c * params.omega_c);
    return std::pow(std::abs(ratio), 1.0 / 6.0);
}

double c6_for_blockade_radius(const MediumParams& params, double rb) {
    if (params.omega_c == 0.0)
        throw ConfigError("blockade radius undefined without control field");
    if (!(rb >= 0.0)) throw ConfigError("blockade radius must be >= 0");
    return 2.0 * params.omega_c * params.omega_c * std::pow(rb, 6) / params.gamma;
}

double optical_depth(const MediumParams& params) {
    return 4.0 * params.g * params.g * params.length /
           (params.c_light * params.gamma);
}

cplx gaussian_pulse(const PulseSpec& pulse, double c_light, double z, double t) {
    const double ct = c_light * pulse.tau;
    const double amp = std::pow(std::numbers::pi * ct * ct, -0.25);
    const double arg = (z - pulse.z0 - c_light * t) / ct;
    return cplx(amp * std::exp(-0.5 * arg * arg), 0.0);
}

cplx gaussian_pulse_spectrum(const PulseSpec& pulse, double c_light, double omega) {
    const double ct = c_light * pulse.tau;
    const double amp = pulse.tau / std::sqrt(2.0 * std::numbers::pi) *
                       std::pow(std::numbers::pi * ct * ct, -0.25);
    const double envelope = std::exp(-0.5 * omega * omega * pulse.tau * pulse.tau);
    const double phase = -omega * pulse.z0 / c_light;
    return amp * envelope * std::polar(1.0, phase);
}

}  // namespace rydsw
