#include "polgate/operator_core.hpp"

#include <cmath>

namespace polgate {

// ---------------------------------------------------------------------------
// elementary operators
// ---------------------------------------------------------------------------

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -ii, ii, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix pauli_plus() {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  return m;
}

Matrix pauli_minus() {
  Matrix m(2, 2);
  m << 0, 0, 1, 0;
  return m;
}

Matrix identity2() { return Matrix::Identity(2, 2); }

// ---------------------------------------------------------------------------
// tensor products
// ---------------------------------------------------------------------------

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix kron(const std::vector<Matrix>& factors) {
  if (factors.empty()) return Matrix::Identity(1, 1);
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Matrix embed(const Matrix& op, int site, int num_sites) {
  if (op.rows() != 2 || op.cols() != 2)
    throw config_error("embed: expected a single-spin (2x2) operator");
  if (site < 0 || site >= num_sites)
    throw config_error("embed: site index out of range");
  std::vector<Matrix> factors(static_cast<std::size_t>(num_sites), identity2());
  factors[static_cast<std::size_t>(site)] = op;
  return kron(factors);
}

// ---------------------------------------------------------------------------
// exponentials and powers
// ---------------------------------------------------------------------------

Matrix exp_hermitian(const Matrix& h, double t, int sign) {
  if (sign != 1 && sign != -1)
    throw config_error("exp_hermitian: sign must be +1 or -1");
  const double scale = std::max(h.norm(), 1.0);
  if ((h - h.adjoint()).norm() > tol_hermiticity * scale)
    throw numerical_error("exp_hermitian: matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw numerical_error("exp_hermitian: eigendecomposition failed");

  const RealVector& eigs = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Vector phases(eigs.size());
  for (Eigen::Index k = 0; k < eigs.size(); ++k)
    phases(k) = std::exp(ii * (sign * t * eigs(k)));
  return v * phases.asDiagonal() * v.adjoint();
}

Matrix matrix_power(const Matrix& u, long long n) {
  if (n < 0) throw config_error("matrix_power: exponent must be non-negative");
  Matrix result = Matrix::Identity(u.rows(), u.cols());
  Matrix base = u;
  long long e = n;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Matrix partial_trace_first(const Matrix& rho, Eigen::Index dim_first) {
  if (dim_first <= 0 || rho.rows() != rho.cols() || rho.rows() % dim_first != 0)
    throw config_error("partial_trace_first: incompatible dimensions");
  const Eigen::Index dim_rest = rho.rows() / dim_first;
  Matrix out = Matrix::Zero(dim_rest, dim_rest);
  for (Eigen::Index e = 0; e < dim_first; ++e)
    out += rho.block(e * dim_rest, e * dim_rest, dim_rest, dim_rest);
  return out;
}

// ---------------------------------------------------------------------------
// comparisons
// ---------------------------------------------------------------------------

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

bool is_unitary(const Matrix& u, double tol) {
  const Matrix eye = Matrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - eye).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Matrix& h, double tol) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace polgate
