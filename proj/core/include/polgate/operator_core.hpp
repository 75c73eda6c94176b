#pragma once

// Dense operator utilities for small multi-spin Hilbert spaces: Pauli
// matrices, tensor-product embedding, Hermitian exponentials and integer
// powers of unitaries.  All operators are stored as dense complex matrices;
// the systems of interest here have dimension at most 16.

#include <vector>

#include "polgate/types.hpp"

namespace polgate {

// Single spin-1/2 operators in the basis {|0>, |1>} with |0> = (1,0)^T.
// pauli_z = diag(1, -1), so |0> is the +1 eigenstate of pauli_z.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix pauli_plus();   // |0><1|: raises toward |0>
Matrix pauli_minus();  // |1><0|
Matrix identity2();

// Kronecker product, leftmost factor outermost (slowest index).
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& factors);

// Embed a single-site operator at `site` (0-based, leftmost site = 0) into a
// register of `num_sites` spin-1/2 slots.  embed(pauli_z(), 0, 2) yields
// diag(1, 1, -1, -1).
Matrix embed(const Matrix& op, int site, int num_sites);

// exp(sign * i * t * H) for Hermitian H, evaluated by spectral decomposition.
// Throws numerical_error if H deviates from Hermiticity by more than
// tol_hermiticity (relative to its norm).  The default sign (-1) gives the
// time-evolution propagator exp(-i H t).
Matrix exp_hermitian(const Matrix& h, double t, int sign = -1);

// U^n for integer n >= 0 by binary exponentiation.
Matrix matrix_power(const Matrix& u, long long n);

// Partial trace over the first (leftmost) tensor factor of dimension
// dim_first: rho on H_first (x) H_rest -> reduced state on H_rest.
Matrix partial_trace_first(const Matrix& rho, Eigen::Index dim_first);

// Frobenius distance-based comparisons.
double max_abs_diff(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, double tol = tol_equality);
bool is_unitary(const Matrix& u, double tol = tol_unitarity);
bool is_hermitian(const Matrix& h, double tol = tol_hermiticity);

}  // namespace polgate
