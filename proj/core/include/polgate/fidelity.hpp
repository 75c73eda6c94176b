#pragma once

// Process-fidelity metrics (Choi-state overlap computed via the trace
// formula), subspace fidelity, and first-order control-error diagnostics.

#include "polgate/sequence.hpp"
#include "polgate/spin_model.hpp"
#include "polgate/types.hpp"

namespace polgate {

struct FidelityValue {
  double value = 0.0;  // in [0, 1]
  int dim = 0;         // Hilbert dimension d (or subspace rank)
};

// F = |tr(U^dag V)|^2 / d^2; global-phase invariant and symmetric.
FidelityValue process_fidelity(const Matrix& u, const Matrix& v);

// F = |tr(P U^dag V P)|^2 / rank(P)^2; leakage out of the projected block
// lowers the value.
FidelityValue subspace_process_fidelity(const Matrix& u, const Matrix& v,
                                        const Matrix& projector);

// exp(-i angle (delta sz/2 + (1+eps)(cos(phase) sx + sin(phase) sy)/2)):
// the per-pulse control-error unitary; angle is the nominal rotation angle
// Omega_r * t, delta the relative detuning, eps the relative amplitude error.
Matrix pulse_error_unitary(double angle, double phase, double delta, double eps);

enum class ErrorChannel { Detuning, Amplitude };

// Operator norm of d/dx U(x) |_{x=0} for x = delta or eps applied uniformly
// to all pulses of the schedule, on a zero-coupling system.  Central finite
// differences at steps 1e-5 and 1e-6 with Richardson extrapolation; throws
// numerical_error if the two steps disagree by more than 1%.
double first_order_error_derivative(const SpinSystem& system_free,
                                    const SequenceSpec& spec,
                                    ErrorChannel which);

}  // namespace polgate
