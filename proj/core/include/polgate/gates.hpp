#pragma once

// Closed-form two-nucleus gate evolutions and reference constructions.
//
// The central object is the simultaneous electron-nuclear exchange evolution
//   U(t) = exp(-i t/2 [a1 (sx Ix1 + s1 sy Iy1) + a2 (sx Ix2 + s2 sy Iy2)])
// which decomposes into two 3x3 excitation sectors plus two frozen states and
// therefore has a fully analytic matrix form.  At the gate time
// t = 2*pi/sqrt(a1^2+a2^2) and a1 = a2 it realises a nuclear swap with
// electron-conditioned phases; for general couplings the invariant
// {|10>,|01>} nuclear block carries an electron-controlled encoded rotation
// of angle alpha = arccos((a1^2-a2^2)/(a1^2+a2^2)).

#include <array>

#include "polgate/sequence.hpp"
#include "polgate/spin_model.hpp"
#include "polgate/types.hpp"

namespace polgate {

// A fully specified two-nucleus gate: sign pair, couplings, timing, the 8x8
// evolution matrix, and the encoded-rotation angle it implements.
struct GateTarget {
  std::array<int, 2> sign_pair{+1, +1};
  double a1 = 0.0;      // rad/us
  double a2 = 0.0;      // rad/us
  double t_gate = 0.0;  // us
  double alpha = 0.0;   // rad, encoded-rotation angle
  Matrix matrix;        // 8x8 unitary
};

// Analytic evolution of the two-nucleus exchange generator above for time t.
// s1, s2 in {+1,-1} choose flip-flop (+) or flip-flip (-) per nucleus.
Matrix flipflop_evolution(double a1, double a2, int s1, int s2, double t);

// Smallest positive t with sin(sqrt(a1^2+a2^2) t / 4) = 1.
double gate_time(double a1, double a2);

// The equal-coupling gate at t = gate_time: a nuclear swap combined with an
// electron-conditioned phase, sign-adjusted for (s1, s2).
Matrix target_gate(int s1, int s2);

// Unequal couplings at the gate time: an electron-controlled rotation by
// alpha = arccos((a1^2-a2^2)/(a1^2+a2^2)) inside the {|10>,|01>} nuclear
// block.  Returns the full gate description.
GateTarget encoded_rotation(double a1, double a2);

// Appends the local nuclear rotation exp(-i pi/2 Iy2) to the gate V; applied
// to |0> (x) |y->|y-> this yields the three-spin GHZ state |0>(|00>+|11>)/√2.
Matrix ghz_circuit(const Matrix& v);

// Reference construction that addresses the nuclei one at a time:
// instantaneous-pulse echo blocks with pulse spacing pi/omega (half the
// Larmor period, legs pi/(2 omega) on each side), two blocks per nucleus,
// each of duration pi/(2 a_eff) rounded to a whole number of echo units.
// Emitted for timing/bandwidth comparison against the simultaneous gate.
// Equal resonance delays for the two nuclei make the construction impossible
// and raise calibration_error.
SegmentSchedule sequential_reference_gate(const SpinSystem& system,
                                          double a1_eff, double a2_eff);

}  // namespace polgate
