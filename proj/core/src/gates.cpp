#include "polgate/gates.hpp"

#include <cmath>
#include <cstdlib>

#include "polgate/operator_core.hpp"

namespace polgate {

namespace {

void check_sign(int s, const char* name) {
  if (s != 1 && s != -1)
    throw config_error(std::string(name) + " must be +1 or -1");
}

// Basis index of |e n1 n2> with the electron leftmost and bit 0 = spin up.
constexpr Eigen::Index idx(int e, int n1, int n2) { return 4 * e + 2 * n1 + n2; }

// Fill one 3x3 excitation sector of the exchange evolution.  States p and q
// couple to the shared state r with strengths alpha and beta respectively.
void fill_sector(Matrix& u, Eigen::Index p, Eigen::Index q, Eigen::Index r,
                 double alpha, double beta, double c, double s, double a_tot) {
  const double a2 = a_tot * a_tot;
  u(p, p) = (beta * beta + alpha * alpha * c) / a2;
  u(q, q) = (alpha * alpha + beta * beta * c) / a2;
  u(p, q) = u(q, p) = (c - 1.0) * alpha * beta / a2;
  u(p, r) = u(r, p) = -ii * s * alpha / a_tot;
  u(q, r) = u(r, q) = -ii * s * beta / a_tot;
  u(r, r) = c;
}

Matrix sign_conjugation(Matrix u, int s1, int s2) {
  if (s1 < 0) {
    const Matrix x1 = embed(pauli_x(), 1, 3);
    u = x1 * u * x1;
  }
  if (s2 < 0) {
    const Matrix x2 = embed(pauli_x(), 2, 3);
    u = x2 * u * x2;
  }
  return u;
}

}  // namespace

Matrix flipflop_evolution(double a1, double a2, int s1, int s2, double t) {
  check_sign(s1, "s1");
  check_sign(s2, "s2");
  Matrix u = Matrix::Identity(8, 8);
  const double a_tot = std::hypot(a1, a2);
  if (a_tot == 0.0) return u;
  const double c = std::cos(a_tot * t / 2.0);
  const double s = std::sin(a_tot * t / 2.0);
  // Single-excitation sector: |0 1 0>, |0 0 1> exchange with |1 0 0>.
  fill_sector(u, idx(0, 1, 0), idx(0, 0, 1), idx(1, 0, 0), a1, a2, c, s, a_tot);
  // Double-excitation sector: |1 1 0>, |1 0 1> exchange with |0 1 1>.
  fill_sector(u, idx(1, 1, 0), idx(1, 0, 1), idx(0, 1, 1), a2, a1, c, s, a_tot);
  return sign_conjugation(std::move(u), s1, s2);
}

double gate_time(double a1, double a2) {
  const double a_tot = std::hypot(a1, a2);
  if (a_tot <= 0.0) throw config_error("gate_time: couplings are both zero");
  return 2.0 * pi / a_tot;
}

Matrix target_gate(int s1, int s2) {
  check_sign(s1, "s1");
  check_sign(s2, "s2");
  // Exact entries of the equal-coupling evolution at the gate time.
  Matrix u = Matrix::Zero(8, 8);
  u(idx(0, 0, 0), idx(0, 0, 0)) = 1.0;
  u(idx(1, 1, 1), idx(1, 1, 1)) = 1.0;
  u(idx(1, 0, 0), idx(1, 0, 0)) = -1.0;
  u(idx(0, 1, 1), idx(0, 1, 1)) = -1.0;
  u(idx(0, 1, 0), idx(0, 0, 1)) = -1.0;
  u(idx(0, 0, 1), idx(0, 1, 0)) = -1.0;
  u(idx(1, 1, 0), idx(1, 0, 1)) = -1.0;
  u(idx(1, 0, 1), idx(1, 1, 0)) = -1.0;
  return sign_conjugation(std::move(u), s1, s2);
}

GateTarget encoded_rotation(double a1, double a2) {
  GateTarget g;
  g.sign_pair = {+1, +1};
  g.a1 = a1;
  g.a2 = a2;
  g.t_gate = gate_time(a1, a2);
  const double a_sq = a1 * a1 + a2 * a2;
  g.alpha = std::acos((a1 * a1 - a2 * a2) / a_sq);
  g.matrix = flipflop_evolution(a1, a2, +1, +1, g.t_gate);
  return g;
}

Matrix ghz_circuit(const Matrix& v) {
  if (v.rows() != 8 || v.cols() != 8)
    throw config_error("ghz_circuit: expected an 8x8 gate");
  const Matrix iy2 = embed(Matrix(0.5 * pauli_y()), 2, 3);
  return exp_hermitian(iy2, pi / 2.0) * v;
}

SegmentSchedule sequential_reference_gate(const SpinSystem& system,
                                          double a1_eff, double a2_eff) {
  const auto& nuclei = system.nuclei();
  if (nuclei.size() != 2)
    throw config_error("sequential_reference_gate: need exactly two nuclei");
  if (a1_eff <= 0.0 || a2_eff <= 0.0)
    throw config_error("sequential_reference_gate: effective couplings must be positive");
  // Echo legs of a quarter Larmor period put the pi-pulse spacing at half the
  // period, so the nucleus rides the fundamental of the modulation square
  // wave (a_eff = a_perp/pi).  Legs of a half period would double the pulse
  // spacing and park the nucleus on the absent even harmonic.
  const double leg_a = pi / (2.0 * nuclei[0].omega_L);
  const double leg_b = pi / (2.0 * nuclei[1].omega_L);
  if (std::abs(leg_a - leg_b) <= 1e-9 * std::max(leg_a, leg_b))
    throw calibration_error(
        "sequential_reference_gate: both nuclei share the same resonance delay");

  const auto echo_block = [](double leg, double a_eff) {
    SegmentSchedule block;
    const double block_time = pi / (2.0 * a_eff);
    const auto num_echoes =
        std::max<long long>(1, std::llround(block_time / (2.0 * leg)));
    block.reserve(static_cast<std::size_t>(3 * num_echoes));
    for (long long k = 0; k < num_echoes; ++k) {
      block.push_back(Segment::free(leg));
      block.push_back(Segment::pulse(pi, 0.0, 0.0));
      block.push_back(Segment::free(leg));
    }
    return block;
  };

  // Two addressing blocks per nucleus, interleaved.
  SegmentSchedule schedule;
  for (int round = 0; round < 2; ++round) {
    for (const auto& [leg, a_eff] :
         {std::pair{leg_a, a1_eff}, std::pair{leg_b, a2_eff}}) {
      SegmentSchedule block = echo_block(leg, a_eff);
      schedule.insert(schedule.end(), block.begin(), block.end());
    }
  }
  return schedule;
}

}  // namespace polgate
