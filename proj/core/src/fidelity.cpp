#include "polgate/fidelity.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "polgate/evolution.hpp"
#include "polgate/operator_core.hpp"

namespace polgate {

FidelityValue process_fidelity(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw config_error("process_fidelity: dimension mismatch");
  const Eigen::Index d = u.rows();
  const complexd tr = (u.adjoint() * v).trace();
  FidelityValue f;
  f.dim = static_cast<int>(d);
  f.value = std::norm(tr) / static_cast<double>(d * d);
  return f;
}

FidelityValue subspace_process_fidelity(const Matrix& u, const Matrix& v,
                                        const Matrix& projector) {
  if (u.rows() != v.rows() || u.rows() != projector.rows() ||
      projector.rows() != projector.cols())
    throw config_error("subspace_process_fidelity: dimension mismatch");
  if ((projector * projector - projector).cwiseAbs().maxCoeff() > 1e-9)
    throw config_error("subspace_process_fidelity: matrix is not a projector");
  const double rank = projector.trace().real();
  const int d_p = static_cast<int>(std::lround(rank));
  if (d_p < 1)
    throw config_error("subspace_process_fidelity: projector has rank zero");
  const complexd tr = (projector * u.adjoint() * v * projector).trace();
  FidelityValue f;
  f.dim = d_p;
  f.value = std::norm(tr) / static_cast<double>(d_p) / static_cast<double>(d_p);
  return f;
}

Matrix pulse_error_unitary(double angle, double phase, double delta, double eps) {
  // exp(-i angle (delta sz + (1+eps)(cos sx + sin sy))/2) in closed form:
  // rotation by angle*|n| about the unit axis n/|n|.
  const double ax = (1.0 + eps) * std::cos(phase);
  const double ay = (1.0 + eps) * std::sin(phase);
  const double az = delta;
  const double len = std::sqrt(ax * ax + ay * ay + az * az);
  Matrix u = Matrix::Identity(2, 2);
  if (len == 0.0 || angle == 0.0) return u;
  const double half = angle * len / 2.0;
  const complexd c = std::cos(half);
  const complexd s = -ii * std::sin(half) / len;
  u(0, 0) = c + s * az;
  u(0, 1) = s * (ax - ii * ay);
  u(1, 0) = s * (ax + ii * ay);
  u(1, 1) = c - s * az;
  return u;
}

double first_order_error_derivative(const SpinSystem& system_free,
                                    const SequenceSpec& spec,
                                    ErrorChannel which) {
  for (const auto& nuc : system_free.nuclei()) {
    if (nuc.a_perp != 0.0 || nuc.a_par != 0.0)
      throw config_error(
          "first_order_error_derivative: system must have zero couplings");
  }
  const SegmentSchedule schedule = generate_schedule(spec);
  const auto propagate = [&](double x) {
    const double delta = (which == ErrorChannel::Detuning) ? x : 0.0;
    const double eps = (which == ErrorChannel::Amplitude) ? x : 0.0;
    return sequence_propagator(system_free, with_errors(schedule, delta, eps))
        .unitary;
  };
  const auto central = [&](double h) {
    return Matrix(((propagate(h) - propagate(-h)) / (2.0 * h)).eval());
  };
  const Matrix d1 = central(1e-5);
  const Matrix d2 = central(1e-6);
  const auto op_norm = [](const Matrix& m) {
    return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
  };
  const double n1 = op_norm(d1);
  const double n2 = op_norm(d2);
  const double scale = std::max(n1, n2);
  if (scale > 1e-3 && op_norm(d1 - d2) > 0.01 * scale)
    throw numerical_error(
        "first_order_error_derivative: finite-difference steps disagree");
  // Richardson extrapolation removes the O(h^2) bias of the central stencil.
  return op_norm((100.0 * d2 - d1) / 99.0);
}

}  // namespace polgate
