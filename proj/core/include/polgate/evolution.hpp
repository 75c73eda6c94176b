#pragma once

// Exact propagation of a spin system under a segment schedule, the frame
// corrections needed to compare against interaction-picture targets, and
// polarization observables.
//
// Conventions: free segments evolve under the static Hamiltonian; finite
// pulses evolve under the full Hamiltonian including the drive (with the
// segment's detuning and amplitude errors); instantaneous pulses apply the
// electron rotation exp(-i angle (delta sz/2 + (1+eps)(cos sx + sin sy)/2)).
// The nominal frame correction is the electron pulse product of the
// error-free, zero-coupling schedule, so that the corrected zero-coupling
// propagator is the identity by construction.

#include <vector>

#include "polgate/sequence.hpp"
#include "polgate/spin_model.hpp"
#include "polgate/types.hpp"

namespace polgate {

struct PropagationResult {
  Matrix unitary;            // full-system propagator
  double total_time = 0.0;   // us
  Matrix frame_correction;   // 2x2 nominal electron rotation of the schedule
};

// Unitary of a single segment on the full system.
Matrix segment_unitary(const SpinSystem& system, const Segment& segment);

// Propagates the schedule segment-by-segment, then raises the result to
// super_period_repeats by matrix_power.  When repeats > 1 the schedule must
// cover a whole number of super-periods so the phase bookkeeping closes.
// Throws numerical_error if unitarity degrades beyond 1e-8.
PropagationResult sequence_propagator(const SpinSystem& system,
                                      const SegmentSchedule& schedule,
                                      int super_period_repeats = 1);

// exp(+i (sum_n omega_n I_z^n) T) * frame_correction^{-1} * unitary: the
// interaction-picture gate to compare against the dressed targets.
Matrix interaction_frame_correction(const PropagationResult& result,
                                    const SpinSystem& system, double T);

// For each tau: prepare electron |1> tensor maximally mixed nuclei, apply R
// half-blocks of the instantaneous phase variant, return per-nucleus <I_z>.
// Result indexed [tau][nucleus].
std::vector<std::vector<double>> polarization_spectrum(
    const SpinSystem& system, double phi, const std::vector<double>& tau_grid,
    int half_blocks);

// Repeated polarization transfer: evolve one full schedule, trace out the
// electron, re-tensor the reset electron state.  Nuclei start maximally
// mixed.  Returns per-cycle nuclear polarizations, indexed [cycle][nucleus].
std::vector<std::vector<double>> polarization_cycle(const SpinSystem& system,
                                                    const SequenceSpec& spec,
                                                    int cycles,
                                                    int electron_reset);

}  // namespace polgate
