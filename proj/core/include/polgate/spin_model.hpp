#pragma once

// Spin systems: one electron qubit (leftmost tensor slot) plus up to three
// nuclear spin-1/2, described in a rotating frame where each nucleus carries
// a Larmor frequency omega_L and hyperfine couplings (a_perp, a_par) to the
// electron.  All frequencies are angular (rad/us); times are in us.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polgate/types.hpp"

namespace polgate {

struct Nucleus {
  double omega_L = 0.0;  // Larmor angular frequency (rad/us), > 0
  double a_perp = 0.0;   // transverse hyperfine coupling (rad/us), >= 0
  double a_par = 0.0;    // parallel hyperfine coupling (rad/us), any sign
  std::string label;
};

struct DriveParams {
  double rabi = 0.0;              // Omega (rad/us)
  double phase = 0.0;             // pulse phase (rad)
  double detuning = 0.0;          // Delta (rad/us)
  double amplitude_factor = 1.0;  // 1 + eps
};

class SpinSystem {
 public:
  explicit SpinSystem(std::vector<Nucleus> nuclei);

  int num_nuclei() const { return static_cast<int>(nuclei_.size()); }
  int num_spins() const { return 1 + num_nuclei(); }
  int dim() const { return 1 << num_spins(); }
  const std::vector<Nucleus>& nuclei() const { return nuclei_; }

  // Electron Pauli operators embedded in the full register.
  const Matrix& sx() const { return sx_; }
  const Matrix& sy() const { return sy_; }
  const Matrix& sz() const { return sz_; }

  // Nuclear spin operators I = sigma/2 for nucleus n (0-based).
  Matrix iz(int n) const;
  Matrix ix(int n) const;
  Matrix iy(int n) const;

  // Static rotating-frame Hamiltonian:
  //   H0 = sum_n omega_n I_z^n + (sigma_z/2) sum_n (a_perp^n I_x^n + a_par^n I_z^n)
  const Matrix& h0() const { return h0_; }

  // Nuclear Larmor part only, sum_n omega_n I_z^n (interaction-frame bookkeeping).
  const Matrix& h_larmor() const { return h_larmor_; }

 private:
  std::vector<Nucleus> nuclei_;
  Matrix h0_, h_larmor_, sx_, sy_, sz_;
};

// Dipolar hyperfine vector (rad/us) for a nucleus at `position` (nm) relative
// to the electron:  A = (mu0 gamma_e gamma_n)/(4 pi |r|^3) [z_hat - 3 (z_hat.r_hat) r_hat].
// The gyromagnetic ratios carry the unit system; pass them scaled such that
// the prefactor comes out in rad/us for nm distances.
std::array<double, 3> hyperfine_vector(const std::array<double, 3>& position_nm,
                                       double gamma_e, double gamma_n);

// Builds a Nucleus from geometry: omega_vec = gamma_n B_z z_hat + A/2, then
// omega_L = |omega_vec|, a_par = omega_hat . A, a_perp = sqrt(|A|^2 - a_par^2).
Nucleus nucleus_from_geometry(const std::array<double, 3>& position_nm,
                              double gamma_n, double b_z, double gamma_e,
                              const std::string& label = "");

// H0 plus, if a drive is given,
//   Delta sigma_z/2 + (1+eps) Omega [sigma_x cos(phase) + sigma_y sin(phase)]/2.
Matrix hamiltonian(const SpinSystem& system,
                   const std::optional<DriveParams>& drive = std::nullopt);

}  // namespace polgate
