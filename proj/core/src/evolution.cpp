#include "polgate/evolution.hpp"

#include <array>
#include <cmath>
#include <map>

#include "polgate/fidelity.hpp"
#include "polgate/operator_core.hpp"

namespace polgate {

namespace {

// Segments repeat heavily across half-blocks; memoize their unitaries.
using SegmentKey = std::array<double, 7>;

SegmentKey key_of(const Segment& s) {
  return {s.kind == SegmentKind::Pulse ? 1.0 : 0.0, s.duration, s.phase,
          s.angle, s.rabi, s.delta_rel, s.amplitude_factor};
}

Matrix nuclear_identity(const SpinSystem& system) {
  const Eigen::Index d = system.dim() / 2;
  return Matrix::Identity(d, d);
}

}  // namespace

Matrix segment_unitary(const SpinSystem& system, const Segment& segment) {
  if (segment.kind == SegmentKind::Free)
    return exp_hermitian(system.h0(), segment.duration);
  if (segment.rabi == 0.0) {
    const Matrix e2 = pulse_error_unitary(segment.angle, segment.phase,
                                          segment.delta_rel,
                                          segment.amplitude_factor - 1.0);
    return kron(e2, nuclear_identity(system));
  }
  DriveParams drive;
  drive.rabi = segment.rabi;
  drive.phase = segment.phase;
  drive.detuning = segment.delta_rel * segment.rabi;
  drive.amplitude_factor = segment.amplitude_factor;
  return exp_hermitian(hamiltonian(system, drive), segment.duration);
}

PropagationResult sequence_propagator(const SpinSystem& system,
                                      const SegmentSchedule& schedule,
                                      int super_period_repeats) {
  if (super_period_repeats < 1)
    throw config_error("sequence_propagator: repeats must be >= 1");
  const Eigen::Index dim = system.dim();
  Matrix u = Matrix::Identity(dim, dim);
  Matrix fe = identity2();
  std::map<SegmentKey, Matrix> cache;
  for (const auto& seg : schedule) {
    auto it = cache.find(key_of(seg));
    if (it == cache.end())
      it = cache.emplace(key_of(seg), segment_unitary(system, seg)).first;
    u = it->second * u;
    if (seg.kind == SegmentKind::Pulse)
      fe = pulse_error_unitary(seg.angle, seg.phase, 0.0, 0.0) * fe;
  }
  PropagationResult result;
  result.unitary = matrix_power(u, super_period_repeats);
  result.frame_correction = matrix_power(fe, super_period_repeats);
  result.total_time = schedule_duration(schedule) * super_period_repeats;
  if (!is_unitary(result.unitary, 1e-8))
    throw numerical_error("sequence_propagator: non-unitary accumulation");
  return result;
}

Matrix interaction_frame_correction(const PropagationResult& result,
                                    const SpinSystem& system, double T) {
  const Matrix unwind = exp_hermitian(system.h_larmor(), T, +1);
  const Matrix fe_inv = kron(result.frame_correction.adjoint(),
                             nuclear_identity(system));
  return fe_inv * unwind * result.unitary;
}

std::vector<std::vector<double>> polarization_spectrum(
    const SpinSystem& system, double phi, const std::vector<double>& tau_grid,
    int half_blocks) {
  const int ns = static_cast<int>(system.nuclei().size());
  if (ns < 1)
    throw config_error("polarization_spectrum: system needs at least one nucleus");
  const Eigen::Index dim = system.dim();
  const Eigen::Index dn = dim / 2;
  // electron |1> tensor maximally mixed nuclei
  Matrix rho0 = Matrix::Zero(dim, dim);
  rho0.block(dn, dn, dn, dn) =
      Matrix::Identity(dn, dn) / static_cast<double>(dn);
  std::vector<Matrix> iz(static_cast<std::size_t>(ns));
  for (int k = 0; k < ns; ++k) iz[static_cast<std::size_t>(k)] = system.iz(k);

  std::vector<std::vector<double>> out;
  out.reserve(tau_grid.size());
  for (double tau : tau_grid) {
    SequenceSpec spec;
    spec.variant = Variant::Phase;
    spec.tau = tau;
    spec.phi = phi;
    spec.half_blocks = half_blocks;
    const auto prop = sequence_propagator(system, generate_phase_variant(spec));
    const Matrix rho = prop.unitary * rho0 * prop.unitary.adjoint();
    std::vector<double> row(static_cast<std::size_t>(ns));
    for (int k = 0; k < ns; ++k)
      row[static_cast<std::size_t>(k)] =
          (rho * iz[static_cast<std::size_t>(k)]).trace().real();
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<double>> polarization_cycle(const SpinSystem& system,
                                                    const SequenceSpec& spec,
                                                    int cycles,
                                                    int electron_reset) {
  if (electron_reset != 0 && electron_reset != 1)
    throw config_error("polarization_cycle: electron_reset must be 0 or 1");
  if (cycles < 1) throw config_error("polarization_cycle: cycles must be >= 1");
  const int ns = static_cast<int>(system.nuclei().size());
  if (ns < 1)
    throw config_error("polarization_cycle: system needs at least one nucleus");
  const Eigen::Index dim = system.dim();
  const Eigen::Index dn = dim / 2;

  const auto prop = sequence_propagator(system, generate_schedule(spec));
  Matrix rho_e = Matrix::Zero(2, 2);
  rho_e(electron_reset, electron_reset) = 1.0;
  Matrix rho_nuc = Matrix::Identity(dn, dn) / static_cast<double>(dn);

  // nuclear I_z in the reduced (electron-traced) register
  std::vector<Matrix> iz(static_cast<std::size_t>(ns));
  for (int k = 0; k < ns; ++k)
    iz[static_cast<std::size_t>(k)] = embed(pauli_z() / 2.0, k, ns);

  std::vector<std::vector<double>> trajectory;
  trajectory.reserve(static_cast<std::size_t>(cycles));
  for (int c = 0; c < cycles; ++c) {
    const Matrix rho = prop.unitary * kron(rho_e, rho_nuc) * prop.unitary.adjoint();
    rho_nuc = partial_trace_first(rho, 2);
    std::vector<double> row(static_cast<std::size_t>(ns));
    for (int k = 0; k < ns; ++k)
      row[static_cast<std::size_t>(k)] =
          (rho_nuc * iz[static_cast<std::size_t>(k)]).trace().real();
    trajectory.push_back(std::move(row));
  }
  return trajectory;
}

}  // namespace polgate
