#include "polgate/sequence.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace polgate {

namespace {

double normalize_phase(double x) {
  double y = std::fmod(x, 2.0 * pi);
  if (y < 0.0) y += 2.0 * pi;
  return y;
}

// Base phase of half-block k: the second half-block of every super-period is
// advanced by phi + pi relative to the first.  The flanking pi/2 pulses sit
// at base + pi/2, the central pi pulse(s) at base.
double base_phase(int k, double phi) {
  return ((k + 1) % 2 == 0) ? 0.0 : phi + pi;
}

struct CentralPulse {
  double center = 0.0;  // us from half-block start
  double angle = 0.0;   // rad
  double phase = 0.0;   // rad
};

// Emits one half-block [0, 2 tau]: flanking pi/2 pulses at both ends plus the
// given central pulses, with pulse durations carved symmetrically out of the
// adjacent free intervals so centers stay put.
void emit_half_block(SegmentSchedule& out, double tau, double rabi,
                     double flank_phase, const std::vector<CentralPulse>& pulses) {
  const double fp = normalize_phase(flank_phase);
  if (rabi == 0.0) {
    out.push_back(Segment::pulse(pi / 2.0, fp, 0.0));
    double prev = 0.0;
    for (const auto& p : pulses) {
      if (p.center < prev - 1e-12 || p.center > 2.0 * tau + 1e-12)
        throw config_error("schedule overflow: pulse center outside half-block");
      out.push_back(Segment::free(std::max(p.center - prev, 0.0)));
      out.push_back(Segment::pulse(p.angle, normalize_phase(p.phase), 0.0));
      prev = p.center;
    }
    out.push_back(Segment::free(std::max(2.0 * tau - prev, 0.0)));
    out.push_back(Segment::pulse(pi / 2.0, fp, 0.0));
    return;
  }
  const double d2 = (pi / 2.0) / rabi;  // pi/2-pulse duration
  out.push_back(Segment::pulse(pi / 2.0, fp, rabi));
  double prev = d2;
  for (const auto& p : pulses) {
    const double d = p.angle / rabi;
    const double gap = (p.center - d / 2.0) - prev;
    if (gap < -1e-12)
      throw config_error("schedule overflow: pulses do not fit between delays");
    out.push_back(Segment::free(std::max(gap, 0.0)));
    out.push_back(Segment::pulse(p.angle, normalize_phase(p.phase), rabi));
    prev = p.center + d / 2.0;
  }
  const double gap = (2.0 * tau - d2) - prev;
  if (gap < -1e-12)
    throw config_error("schedule overflow: pulses do not fit between delays");
  out.push_back(Segment::free(std::max(gap, 0.0)));
  out.push_back(Segment::pulse(pi / 2.0, fp, rabi));
}

void validate_common(const SequenceSpec& spec) {
  if (!(spec.tau > 0.0)) throw config_error("tau must be positive");
  if (spec.half_blocks < 1) throw config_error("half_blocks must be >= 1");
  if (spec.rabi < 0.0) throw config_error("rabi must be non-negative");
  if (spec.phi < 0.0 || spec.phi >= 2.0 * pi)
    throw config_error("phi must lie in [0, 2*pi)");
  if (spec.tau1 < 0.0 || spec.tau2 < 0.0)
    throw config_error("tau1/tau2 must be non-negative");
}

// Centers of the five composite pi-pulses within one half-block; the pulse
// width w = pi/Omega (0 for instantaneous pulses) keeps the free gaps between
// consecutive pulse edges at [tau1, tau2, tau2, tau1].
std::vector<double> composite_centers(double tau, double tau1, double tau2, double w) {
  return {tau - tau1 - tau2 - 2.0 * w, tau - tau2 - w, tau, tau + tau2 + w,
          tau + tau1 + tau2 + 2.0 * w};
}

}  // namespace

Segment Segment::free(double duration_us) {
  Segment s;
  s.kind = SegmentKind::Free;
  s.duration = duration_us;
  return s;
}

Segment Segment::pulse(double angle_rad, double phase_rad, double rabi_rad_per_us) {
  Segment s;
  s.kind = SegmentKind::Pulse;
  s.angle = angle_rad;
  s.phase = phase_rad;
  s.rabi = rabi_rad_per_us;
  s.duration = (rabi_rad_per_us > 0.0) ? angle_rad / rabi_rad_per_us : 0.0;
  return s;
}

SegmentSchedule generate_phase_variant(const SequenceSpec& spec) {
  validate_common(spec);
  SegmentSchedule out;
  for (int k = 0; k < spec.half_blocks; ++k) {
    const double b = base_phase(k, spec.phi);
    emit_half_block(out, spec.tau, spec.rabi, b + pi / 2.0,
                    {{spec.tau, pi, b}});
  }
  return out;
}

SegmentSchedule generate_duration_variant(const SequenceSpec& spec) {
  validate_common(spec);
  SegmentSchedule out;
  for (int k = 0; k < spec.half_blocks; ++k) {
    const double angle = (k % 2 == 0) ? spec.phi : 2.0 * pi - spec.phi;
    emit_half_block(out, spec.tau, spec.rabi, pi / 2.0,
                    {{spec.tau, angle, 0.0}});
  }
  return out;
}

SegmentSchedule generate_composite_variant(const SequenceSpec& spec) {
  validate_common(spec);
  const double w = (spec.rabi > 0.0) ? pi / spec.rabi : 0.0;
  const auto centers = composite_centers(spec.tau, spec.tau1, spec.tau2, w);
  const auto& pattern = spec.composite_phase_offsets;
  SegmentSchedule out;
  for (int k = 0; k < spec.half_blocks; ++k) {
    const double b = base_phase(k, spec.phi);
    std::array<double, 5> offs{};
    if (!pattern.empty()) offs = pattern[(k / 2) % pattern.size()];
    std::vector<CentralPulse> pulses;
    pulses.reserve(5);
    for (int j = 0; j < 5; ++j)
      pulses.push_back({centers[static_cast<size_t>(j)], pi, b + offs[static_cast<size_t>(j)]});
    emit_half_block(out, spec.tau, spec.rabi, b + pi / 2.0, pulses);
  }
  return out;
}

SegmentSchedule generate_schedule(const SequenceSpec& spec) {
  switch (spec.variant) {
    case Variant::Phase:
      return generate_phase_variant(spec);
    case Variant::Duration:
      return generate_duration_variant(spec);
    case Variant::Composite:
      return generate_composite_variant(spec);
  }
  throw config_error("unknown sequence variant");
}

SegmentSchedule with_errors(const SegmentSchedule& schedule, double delta_rel,
                            double eps_amp) {
  SegmentSchedule out = schedule;
  for (auto& s : out) {
    if (s.kind != SegmentKind::Pulse) continue;
    s.delta_rel = delta_rel;
    s.amplitude_factor = 1.0 + eps_amp;
  }
  return out;
}

double modulation_function(double t, const SequenceSpec& spec) {
  if (spec.variant == Variant::Duration)
    throw config_error("modulation function is defined for phase/composite variants");
  validate_common(spec);
  const double tau = spec.tau;
  const double period = 2.0 * tau;
  double x = std::fmod(t, period);
  if (x < 0.0) x += period;

  const double w = (spec.rabi > 0.0) ? pi / spec.rabi : 0.0;
  std::vector<double> centers;
  if (spec.variant == Variant::Composite)
    centers = composite_centers(tau, spec.tau1, spec.tau2, w);
  else
    centers = {tau};

  if (spec.rabi == 0.0) {
    double s = 1.0;
    for (double c : centers) {
      if (x == c) return 0.0;
      if (x > c) s = -s;
    }
    return s;
  }

  const double d2 = (pi / 2.0) / spec.rabi;
  if (x < d2) return std::sin(spec.rabi * x);
  if (x > period - d2) {
    const double s = (centers.size() % 2 == 0) ? 1.0 : -1.0;
    return s * std::cos(spec.rabi * (x - (period - d2)));
  }
  double s = 1.0;
  for (double c : centers) {
    if (x < c - w / 2.0) return s;
    if (x <= c + w / 2.0) return s * std::cos(spec.rabi * (x - (c - w / 2.0)));
    s = -s;
  }
  return s;
}

double schedule_duration(const SegmentSchedule& schedule) {
  double total = 0.0;
  for (const auto& s : schedule) total += s.duration;
  return total;
}

std::string dump_schedule(const SegmentSchedule& schedule) {
  std::string out;
  char line[192];
  for (const auto& s : schedule) {
    std::snprintf(line, sizeof(line), "%s\t%.12g\t%.12g\t%.12g\t%.12g\n",
                  s.kind == SegmentKind::Pulse ? "pulse" : "free", s.duration,
                  s.phase, s.angle, s.rabi);
    out += line;
  }
  return out;
}

}  // namespace polgate
