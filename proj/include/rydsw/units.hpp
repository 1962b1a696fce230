#pragma once

#include <cmath>

namespace rydsw {

inline constexpr double kSpeedOfLightSi = 2.99792458e8;  // m/s

// Internal nondimensional convention: the reference decay rate maps to 1,
// times are measured in 1/gamma, angular frequencies in gamma, lengths in
// micrometers. SI values appear only at the configuration boundary.
struct UnitSystem {
    double gamma_si = 1.0;  // reference decay rate [rad/s]

    static constexpr double length_unit_m = 1e-6;  // one internal length unit

    double frequency_from_si(double rad_per_s) const { return rad_per_s / gamma_si; }
    double frequency_to_si(double internal) const { return internal * gamma_si; }

    double time_from_si(double seconds) const { return seconds * gamma_si; }
    double time_to_si(double internal) const { return internal / gamma_si; }

    double length_from_si(double meters) const { return meters / length_unit_m; }
    double length_to_si(double internal) const { return internal * length_unit_m; }

    double velocity_from_si(double m_per_s) const {
        return m_per_s / (length_unit_m * gamma_si);
    }
    double velocity_to_si(double internal) const {
        return internal * length_unit_m * gamma_si;
    }

    // vdW dispersion coefficient [rad/s * m^6] <-> [gamma * um^6]
    double c6_from_si(double rad_s_m6) const {
        const double m6 = std::pow(length_unit_m, 6);
        return rad_s_m6 / (gamma_si * m6);
    }
    double c6_to_si(double internal) const {
        const double m6 = std::pow(length_unit_m, 6);
        return internal * gamma_si * m6;
    }

    double wavenumber_from_si(double rad_per_m) const {
        return rad_per_m * length_unit_m;
    }
    double wavenumber_to_si(double internal) const {
        return internal / length_unit_m;
    }

    double c_light_internal() const { return velocity_from_si(kSpeedOfLightSi); }
};

}  // namespace rydsw
