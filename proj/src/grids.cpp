#include "rydsw/grids.hpp"

#include <algorithm>
#include <cmath>

namespace rydsw {

namespace {

int next_pow2(double x) {
    int n = 1;
    while (n < x) {
        n *= 2;
        if (n > (1 << 22)) throw ConfigError("frequency grid size out of range");
    }
    return n;
}

}  // namespace

double required_time_window(const MediumParams& medium, const PulseSpec& pulse) {
    const double transit = (medium.length - pulse.z0) / medium.c_light;
    const double group_delay = optical_depth(medium) / medium.gamma;
    return transit + 6.0 * pulse.tau + group_delay + 10.0 / medium.gamma;
}

void FrequencyGrid::validate(const MediumParams& medium, const PulseSpec& pulse) const {
    if (n < 8) throw ConfigError("frequency grid: too few samples");
    const double band = 2.0 * omega_max;
    const double slack = 1.0 + 1e-9;
    if (band * slack < 8.0 / pulse.tau)
        throw ConfigError("frequency grid: band narrower than pulse bandwidth");
    if (band * slack < 4.0 * medium.gamma)
        throw ConfigError("frequency grid: band narrower than absorption line");
    const double max_spacing =
        std::min(1.0 / (8.0 * pulse.tau), medium.gamma / 32.0);
    if (spacing() > max_spacing * slack)
        throw ConfigError("frequency grid: spacing too coarse");
    if (time_window() < required_time_window(medium, pulse))
        throw ConfigError("frequency grid: time window too short for scenario");
}

FrequencyGrid FrequencyGrid::automatic(const MediumParams& medium,
                                       const PulseSpec& pulse, double refine) {
    // omega_max fixes the time step (dt = pi/omega_max); keep >= 5 samples
    // per pulse width and enough band that the truncated spectral mass is
    // negligible against the window-edge tolerance.
    const double omega_max =
        std::max(5.0 * std::numbers::pi / pulse.tau, 2.5 * medium.gamma);
    double spacing = std::min(1.0 / (8.0 * pulse.tau), medium.gamma / 32.0);
    spacing = std::min(spacing, 2.0 * std::numbers::pi /
                                    required_time_window(medium, pulse));
    spacing /= std::max(refine, 1.0);
    FrequencyGrid grid;
    grid.omega_max = omega_max;
    grid.n = next_pow2(2.0 * omega_max / spacing);
    return grid;
}

void SpatialGrid::validate(const MediumParams& medium, double rb) const {
    if (n < 2) throw ConfigError("spatial grid: too few nodes");
    if (std::abs(length - medium.length) > 1e-12 * medium.length)
        throw ConfigError("spatial grid: length mismatch");
    const double feature = std::min(std::isfinite(rb) && rb > 0.0 ? rb : length, length);
    if (dz() > feature / 64.0 * (1.0 + 1e-9))
        throw ConfigError("spatial grid: does not resolve blockade radius");
}

SpatialGrid SpatialGrid::automatic(const MediumParams& medium, double rb,
                                   double refine) {
    const double feature =
        std::min(std::isfinite(rb) && rb > 0.0 ? rb : medium.length, medium.length);
    const double per_feature = 64.0 * std::max(refine, 1.0);
    int intervals = static_cast<int>(
        std::ceil(std::max(192.0 * std::max(refine, 1.0),
                           per_feature * medium.length / feature)));
    intervals = std::min(intervals, 1 << 14);
    SpatialGrid grid;
    grid.length = medium.length;
    grid.n = intervals + 1;
    return grid;
}

}  // namespace rydsw
