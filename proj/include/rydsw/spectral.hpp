#pragma once

#include "rydsw/field_solution.hpp"
#include "rydsw/grids.hpp"
#include "rydsw/susceptibility.hpp"

namespace rydsw {

struct SpectralOptions {
    int threads = 0;              // 0: hardware concurrency
    double quad_rel_tol = 1e-8;   // relative tolerance of the chi z-integral
    double aliasing_tol = 1e-6;   // window-edge field tolerance (vs peak |E|)
    bool two_level = false;       // strong-blockade limit for all components
    bool check_aliasing = true;
};

// Frequency-domain fields of one component on (z, omega); retarded-frame
// convention, i.e. the free phase e^{i omega z / c} is not included:
//   E~(z,w) = E0~(w) exp[(i g / c) Int_0^z chi(z',w) dz']
//   P~ = chi E~,  S~ = -Omega g E~ / (Omega^2 - (w - V)(w + i gamma/2))
struct FrequencyDomainFields {
    SpatialGrid zg;
    FrequencyGrid wg;
    std::vector<cplx> E, P, S;  // row-major in z: [iz * n_omega + iw]

    std::size_t index(int iz, int iw) const {
        return static_cast<std::size_t>(iz) * wg.n + iw;
    }
};

// Cumulative phase integral Int_0^{z_i} chi(z', omega) dz' on the spatial
// nodes, adaptive per-interval quadrature with forced refinement near the
// gate where the potential varies steeply.
std::vector<cplx> integrate_chi_profile(const ChiModel& chi_model,
                                        const SpatialGrid& zg, double omega,
                                        double rel_tol);

FrequencyDomainFields solve_frequency_domain(const ChiModel& chi_model,
                                             const PulseSpec& pulse,
                                             const SpatialGrid& zg,
                                             const FrequencyGrid& wg,
                                             const SpectralOptions& opts = {});

// Inverse transform per z node onto the dual time window; throws SolverError
// when the window edges carry more than aliasing_tol of the peak field.
FieldSolution reconstruct_time_domain(const FrequencyDomainFields& fdf,
                                      const SpectralOptions& opts = {});

// Convenience: frequency solve + reconstruction for one gate position.
FieldSolution solve_component(const ChiModel& chi_model, const PulseSpec& pulse,
                              const SpatialGrid& zg, const FrequencyGrid& wg,
                              const SpectralOptions& opts = {});

// One independent solve per spinwave component (the dynamics is linear in
// the photon amplitude, so components never couple).
std::vector<FieldSolution> solve_all_components(const MediumParams& medium,
                                                const SpinwaveState& spinwave,
                                                const PulseSpec& pulse,
                                                const SpatialGrid& zg,
                                                const FrequencyGrid& wg,
                                                const SpectralOptions& opts = {});

}  // namespace rydsw
