#pragma once

// Resonance conditions and effective-coupling formulas.
//
// A nuclear spin at Larmor frequency omega interacts resonantly with the
// sequence when tau = (n + 1/2 +- phi/(2 pi)) * pi / omega; the label (n, +-)
// selects the harmonic and the interaction orientation (+: flip-flip, -:
// flip-flop).  On resonance the surviving coupling is the Fourier overlap of
// the modulation function with the nuclear precession, available in closed
// form for instantaneous pulses, composite groups, and finite pulse widths.

#include <optional>
#include <vector>

#include "polgate/sequence.hpp"
#include "polgate/types.hpp"

namespace polgate {

struct ResonanceEntry {
  int n = 0;     // resonance order, n >= 0
  int sign = 1;  // +1 or -1
};

using ResonanceAssignment = std::vector<ResonanceEntry>;

struct EffectiveCoupling {
  double a_eff = 0.0;  // rad/us
  int sign = 1;        // +1: flip-flip orientation, -1: flip-flop
};

struct PhiSolution {
  double phi = 0.0;  // rad, in (0, 2 pi)
  double tau = 0.0;  // common delay (us)
  int n = 0;         // lower resonance order used
};

// tau = (n + 1/2 + sign * phi/(2 pi)) * pi / omega.  Throws config_error when
// the result would be non-positive.
double resonance_tau(double omega, int n, int sign, double phi);

// Phase solving for two spins polarized in opposite directions: places spin 1
// on (0,+) and spin 2 on (1,-) at a common tau.  Requires 1 < omega2/omega1
// < 3.  With printed_prefactor the historical pi/2-prefactor variant is
// returned for comparison plots; it does not satisfy the equal-tau condition.
PhiSolution phi_for_opposite(double omega1, double omega2,
                             bool printed_prefactor = false);

// Phase solving for two spins polarized in the same direction: places the
// spins on (n, sign) and (n+1, sign) at a common tau.  n < 0 selects the
// smallest order with phi/(2 pi) in (0, 1).
PhiSolution phi_for_same(double omega1, double omega2, int sign, int n = -1);

// Closed-form couplings (rad/us).
double a_eff_instant(double a_perp, double omega_L, double tau);
double a_eff_composite(double a_perp, double omega_L, double tau, double tau1,
                       double tau2);
// Finite-pulse composite coupling; requires omega_L/rabi < 1 and the pulses
// to fit into the half-period.
double a_eff_finite(double a_perp, double omega_L, double tau, double tau1,
                    double tau2, double rabi);

// Numerical oracle: (1/(2 tau)) * integral_0^tau sin(omega_L (tau - t)) f1(t) dt
// by piecewise Gauss-Kronrod quadrature (absolute tolerance 1e-9), per unit
// a_perp.
double fourier_overlap(const SequenceSpec& spec, double omega_L);

struct SpinChannel {
  double a_perp = 0.0;   // rad/us
  double omega_L = 0.0;  // rad/us
};

struct CalibrationResult {
  double tau1 = 0.0;
  double tau2 = 0.0;
  double a_eff1 = 0.0;     // rad/us at the returned delays
  double a_eff2 = 0.0;     // rad/us
  double residual = 0.0;   // final |a1 - ratio*a2| + |a2 - magnitude| (rad/us)
};

// Finds composite delays (tau1, tau2) such that
//   a_eff(spin1) / a_eff(spin2) = target_ratio   (1e-6 relative)
// searching tau1,2 in [0, max((pi + phi)/(2 min(omega_L)), tau - 3 pi/rabi)]
// by coarse grid followed by damped-Newton polishing.  rabi == 0 selects the
// instantaneous-pulse coupling model.  The second equation pins the coupling
// magnitude: |a_eff2| = magnitude_target when provided (seeds closest to the
// target are polished first), otherwise the magnitude of the best grid candidate
// (preferring candidates maximizing min |a_eff|, i.e. the fastest gate).
// Both spins must satisfy their resonance condition at (tau, phi) within
// 1e-9.  Throws calibration_error (reporting the best residual) when no root
// is found.
CalibrationResult calibrate_delays(const SpinChannel& spin1,
                                   const SpinChannel& spin2,
                                   const ResonanceAssignment& assignment,
                                   double tau, double phi, double target_ratio,
                                   double rabi,
                                   std::optional<double> magnitude_target = std::nullopt);

}  // namespace polgate
