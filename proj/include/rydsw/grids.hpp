#pragma once

#include <numbers>

#include "rydsw/params.hpp"

namespace rydsw {

// Uniform frequency band [-omega_max, omega_max) with n samples. Its DFT dual
// is the retarded-time window [0, 2 pi / spacing) with step pi / omega_max.
struct FrequencyGrid {
    int n = 0;
    double omega_max = 0.0;

    double spacing() const { return 2.0 * omega_max / n; }
    double omega(int i) const { return -omega_max + i * spacing(); }
    double time_window() const { return 2.0 * std::numbers::pi / spacing(); }
    double dt() const { return time_window() / n; }
    double t(int i) const { return i * dt(); }

    // Band and spacing requirements; throws ConfigError before any solve.
    void validate(const MediumParams& medium, const PulseSpec& pulse) const;

    static FrequencyGrid automatic(const MediumParams& medium, const PulseSpec& pulse,
                                   double refine = 1.0);
};

// n nodes uniformly spanning [0, L], boundaries included.
struct SpatialGrid {
    int n = 0;
    double length = 0.0;

    double dz() const { return length / (n - 1); }
    double z(int i) const { return i * dz(); }

    void validate(const MediumParams& medium, double rb) const;

    // rb is the blockade radius to resolve; pass >= L (or infinity) when no
    // gate structure is present.
    static SpatialGrid automatic(const MediumParams& medium, double rb,
                                 double refine = 1.0);
};

// Time the slowest scenario content needs inside the reconstruction window:
// launch distance, pulse tails, the absorptive group delay and decay ringdown.
double required_time_window(const MediumParams& medium, const PulseSpec& pulse);

}  // namespace rydsw
