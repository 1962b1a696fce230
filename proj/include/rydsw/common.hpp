#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace rydsw {

using cplx = std::complex<double>;

// Invalid or inconsistent user-facing input (configuration, grids).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed-form expression evaluated outside its regime of validity.
struct RegimeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure inside a solver (non-finite fields, aliasing, ...).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rydsw
