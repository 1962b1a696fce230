#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "rydsw/params.hpp"

namespace rydsw {

// Per-component solution on a (z, t) grid, with t the retarded time t - z/c.
// Arrays are row-major in z: index(iz, it) = iz * nt + it.
struct FieldSolution {
    MediumParams medium;
    std::vector<double> z;  // nodes on [0, L]
    std::vector<double> t;  // uniform retarded-time nodes starting at 0
    int component = 0;
    double gate_position = std::nan("");
    bool two_level = false;

    std::vector<cplx> E, P, S;

    struct Diagnostics {
        double peak_abs_e = 0.0;           // max |E| over the grid
        double edge_field_ratio = 0.0;     // |E| at window edges / peak
        double initial_polarization_ratio = 0.0;  // max |P(z, t=0)| / peak |P|
        double residual_norm_end = 0.0;    // in-medium norm at the last sample
    };
    Diagnostics diag;

    int nz() const { return static_cast<int>(z.size()); }
    int nt() const { return static_cast<int>(t.size()); }

    std::size_t index(int iz, int it) const {
        return static_cast<std::size_t>(iz) * t.size() + it;
    }
    std::span<const cplx> row(const std::vector<cplx>& field, int iz) const {
        return {field.data() + index(iz, 0), t.size()};
    }
    std::span<cplx> row(std::vector<cplx>& field, int iz) const {
        return {field.data() + index(iz, 0), t.size()};
    }
};

// Fill FieldSolution::diag from the arrays (peaks, edge ratios, residual).
void finalize_diagnostics(FieldSolution& sol);

}  // namespace rydsw
