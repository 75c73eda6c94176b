#pragma once

// Pulse-schedule representation and the three sequence families:
//
//   Phase:     per half-block k (duration 2 tau):
//                (pi/2 @ b+pi/2) - tau - (pi @ b) - tau - (pi/2 @ b+pi/2)
//              with base phase b = ((k+1) mod 2) * (phi + pi); the toggling
//              frame advances by phi+pi every 2 tau, placing resonances at
//              tau * omega / pi = n + 1/2 +- phi/(2 pi).
//
//   Duration:  same skeleton with fixed phases (pi/2, 0, pi/2) and the
//              central pulse angle alternating between phi and 2 pi - phi;
//              at phi = pi this is segment-for-segment the phase family.
//
//   Composite: the phase family with each central pi-pulse replaced by five
//              pi-pulses symmetric about the original center, free gaps
//              [tau1, tau2, tau2, tau1] between pulse edges.  Optional
//              per-pulse phase offsets (cycled per super-period) implement
//              error-compensating composite cycles.
//
// Finite pulses are carved symmetrically out of the adjacent free intervals
// so pulse centers sit exactly where instantaneous pulses would.

#include <array>
#include <string>
#include <vector>

#include "polgate/types.hpp"

namespace polgate {

enum class SegmentKind { Free, Pulse };

struct Segment {
  SegmentKind kind = SegmentKind::Free;
  double duration = 0.0;  // us (0 for instantaneous pulses)
  // Pulse-only fields:
  double phase = 0.0;             // rad
  double angle = 0.0;             // nominal rotation angle (rad)
  double rabi = 0.0;              // rad/us; 0 marks an instantaneous pulse
  double delta_rel = 0.0;         // detuning relative to rabi (Delta = delta_rel * rabi)
  double amplitude_factor = 1.0;  // 1 + eps

  static Segment free(double duration_us);
  static Segment pulse(double angle_rad, double phase_rad, double rabi_rad_per_us);
};

using SegmentSchedule = std::vector<Segment>;

enum class Variant { Phase, Duration, Composite };

struct SequenceSpec {
  Variant variant = Variant::Phase;
  double tau = 0.0;   // half-period delay (us)
  double phi = 0.0;   // resonance-control phase (rad), in [0, 2 pi)
  double tau1 = 0.0;  // composite delay (us)
  double tau2 = 0.0;  // composite delay (us)
  int half_blocks = 2;  // R; even for gate use
  double rabi = 0.0;    // Omega (rad/us); 0 = instantaneous pulses
  // Composite only: per-pulse phase offsets added to the base phase of the
  // five central pi-pulses.  Entry j of the pattern applies to super-period
  // j mod pattern-size (both half-blocks of a super-period share it).
  std::vector<std::array<double, 5>> composite_phase_offsets;
};

// Schedule generators.  All emit half_blocks half-blocks of total duration
// 2 tau each (within 1e-12 us) and throw config_error("schedule overflow")
// if finite pulses do not fit into the free delays.
SegmentSchedule generate_phase_variant(const SequenceSpec& spec);
SegmentSchedule generate_duration_variant(const SequenceSpec& spec);
SegmentSchedule generate_composite_variant(const SequenceSpec& spec);
SegmentSchedule generate_schedule(const SequenceSpec& spec);  // dispatch on variant

// Returns a copy with every pulse carrying detuning Delta = delta_rel * rabi
// (relative detuning for instantaneous pulses) and amplitude factor
// 1 + eps_amp.  Free segments are unchanged.
SegmentSchedule with_errors(const SegmentSchedule& schedule, double delta_rel,
                            double eps_amp);

// Modulation function f1(t): +-1 plateaus with sinusoidal ramps of width
// (pulse duration) during pulses; antiperiodic over tau, periodic over 2 tau;
// instantaneous limit is a square wave flipping sign at pulse centers.
double modulation_function(double t, const SequenceSpec& spec);

// Total scheduled duration (us).
double schedule_duration(const SegmentSchedule& schedule);

// One segment per line, tab-separated:
//   kind  duration_us  phase_rad  angle_rad  rabi_rad_per_us
std::string dump_schedule(const SegmentSchedule& schedule);

}  // namespace polgate
