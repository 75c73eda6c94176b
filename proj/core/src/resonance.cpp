#include "polgate/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace polgate {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw config_error(msg);
}

// Integral of sin(omega (tau - t)) over [a, b] times plateau sign s.
double flat_piece(double omega, double tau, double a, double b, double s) {
  return s * (std::cos(omega * (tau - b)) - std::cos(omega * (tau - a))) / omega;
}

// Integral of s * sin(omega (tau - t)) * sin(rabi (t - tc)) over [a, b]:
// the sinusoidal ramp of a pulse centered at tc.
double ramp_piece(double omega, double rabi, double tau, double a, double b,
                  double tc, double s) {
  const auto i_plus = [&](double t) {
    return -std::sin(omega * tau + rabi * tc - (omega + rabi) * t) / (omega + rabi);
  };
  const auto i_minus = [&](double t) {
    return -std::sin(omega * tau - rabi * tc - (omega - rabi) * t) / (omega - rabi);
  };
  return s * 0.5 * ((i_plus(b) - i_plus(a)) - (i_minus(b) - i_minus(a)));
}

}  // namespace

double resonance_tau(double omega, int n, int sign, double phi) {
  require(omega > 0.0, "resonance_tau: omega must be positive");
  require(n >= 0, "resonance_tau: resonance order must be non-negative");
  require(sign == 1 || sign == -1, "resonance_tau: sign must be +1 or -1");
  const double tau = (n + 0.5 + sign * phi / (2.0 * pi)) * pi / omega;
  require(tau > 0.0, "resonance_tau: resulting tau is non-positive");
  return tau;
}

PhiSolution phi_for_opposite(double omega1, double omega2, bool printed_prefactor) {
  require(omega1 > 0.0 && omega2 > 0.0, "phi_for_opposite: frequencies must be positive");
  const double r = omega2 / omega1;
  require(r > 1.0 && r < 3.0,
          "phi_for_opposite: no solution, omega2/omega1 must lie in (1, 3)");
  const double prefactor = printed_prefactor ? pi / 2.0 : pi;
  PhiSolution sol;
  sol.phi = prefactor * (3.0 - r) / (1.0 + r);
  sol.n = 0;
  sol.tau = resonance_tau(omega1, 0, +1, sol.phi);
  if (!printed_prefactor) {
    const double tau_b = resonance_tau(omega2, 1, -1, sol.phi);
    if (std::abs(sol.tau - tau_b) > 1e-12 * std::max(1.0, sol.tau))
      throw numerical_error("phi_for_opposite: resonance consistency check failed");
  }
  return sol;
}

PhiSolution phi_for_same(double omega1, double omega2, int sign, int n) {
  require(omega1 > 0.0 && omega2 > omega1, "phi_for_same: requires 0 < omega1 < omega2");
  require(sign == 1 || sign == -1, "phi_for_same: sign must be +1 or -1");
  const double r = omega2 / omega1;
  const double base = (3.0 - r) / (2.0 * (r - 1.0));  // = 1/(r-1) - 1/2
  const auto x_of = [&](int order) { return sign * (base - order); };
  if (n < 0) {
    for (int order = 0; order < 10000000; ++order) {
      const double x = x_of(order);
      if (x > 0.0 && x < 1.0) {
        n = order;
        break;
      }
      // x is monotone in the order; stop once it has passed the window
      if ((sign > 0 && x < 0.0) || (sign < 0 && x > 1.0)) break;
    }
    require(n >= 0, "phi_for_same: no resonance order gives phi/(2 pi) in (0, 1)");
  }
  const double x = x_of(n);
  require(x > 0.0 && x < 1.0, "phi_for_same: no solution at the requested order");
  PhiSolution sol;
  sol.phi = 2.0 * pi * x;
  sol.n = n;
  sol.tau = resonance_tau(omega1, n, sign, sol.phi);
  const double tau_b = resonance_tau(omega2, n + 1, sign, sol.phi);
  if (std::abs(sol.tau - tau_b) > 1e-12 * std::max(1.0, sol.tau))
    throw numerical_error("phi_for_same: resonance consistency check failed");
  return sol;
}

double a_eff_instant(double a_perp, double omega_L, double tau) {
  require(omega_L > 0.0 && tau > 0.0, "a_eff_instant: omega_L and tau must be positive");
  return a_perp / (2.0 * tau * omega_L) * (1.0 - std::cos(omega_L * tau));
}

double a_eff_composite(double a_perp, double omega_L, double tau, double tau1,
                       double tau2) {
  require(omega_L > 0.0 && tau > 0.0, "a_eff_composite: omega_L and tau must be positive");
  require(tau1 >= 0.0 && tau2 >= 0.0, "a_eff_composite: delays must be non-negative");
  const double bracket = 1.0 - std::cos(omega_L * tau) - 2.0 * std::cos(omega_L * tau2) +
                         2.0 * std::cos(omega_L * (tau1 + tau2));
  return a_perp / (2.0 * tau * omega_L) * bracket;
}

double a_eff_finite(double a_perp, double omega_L, double tau, double tau1,
                    double tau2, double rabi) {
  require(omega_L > 0.0 && tau > 0.0, "a_eff_finite: omega_L and tau must be positive");
  require(tau1 >= 0.0 && tau2 >= 0.0, "a_eff_finite: delays must be non-negative");
  require(rabi > 0.0 && omega_L / rabi < 1.0,
          "a_eff_finite: requires omega_L/rabi < 1");
  const double w = pi / rabi;
  const double h = w / 2.0;
  const double t1 = tau - tau1 - tau2 - 2.0 * w;
  const double t2 = tau - tau2 - w;
  require(t1 - h >= h - 1e-12, "a_eff_finite: pulses do not fit into the half-period");
  const double integral =
      ramp_piece(omega_L, rabi, tau, 0.0, h, 0.0, +1.0) +
      flat_piece(omega_L, tau, h, t1 - h, +1.0) +
      ramp_piece(omega_L, rabi, tau, t1 - h, t1 + h, t1, -1.0) +
      flat_piece(omega_L, tau, t1 + h, t2 - h, -1.0) +
      ramp_piece(omega_L, rabi, tau, t2 - h, t2 + h, t2, +1.0) +
      flat_piece(omega_L, tau, t2 + h, tau - h, +1.0) +
      ramp_piece(omega_L, rabi, tau, tau - h, tau, tau, -1.0);
  return a_perp * integral / (2.0 * tau);
}

double fourier_overlap(const SequenceSpec& spec, double omega_L) {
  require(omega_L > 0.0, "fourier_overlap: omega_L must be positive");
  require(spec.variant != Variant::Duration,
          "fourier_overlap: defined for phase/composite variants");
  const double tau = spec.tau;
  require(tau > 0.0, "fourier_overlap: tau must be positive");

  // Split [0, tau] at the points where f1 is non-smooth.
  std::vector<double> cuts = {0.0, tau};
  std::vector<double> centers;
  if (spec.variant == Variant::Composite) {
    const double w = (spec.rabi > 0.0) ? pi / spec.rabi : 0.0;
    centers = {tau - spec.tau1 - spec.tau2 - 2.0 * w, tau - spec.tau2 - w, tau};
  } else {
    centers = {tau};
  }
  if (spec.rabi > 0.0) {
    const double w = pi / spec.rabi;
    cuts.push_back((pi / 2.0) / spec.rabi);
    for (double c : centers) {
      for (double edge : {c - w / 2.0, c + w / 2.0})
        if (edge > 0.0 && edge < tau) cuts.push_back(edge);
    }
  } else {
    for (double c : centers)
      if (c > 0.0 && c < tau) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const auto integrand = [&](double t) {
    return std::sin(omega_L * (tau - t)) * modulation_function(t, spec);
  };
  using quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] < 1e-15) continue;
    total += quad::integrate(integrand, cuts[i], cuts[i + 1], 8, 1e-12);
  }
  return total / (2.0 * tau);
}

CalibrationResult calibrate_delays(const SpinChannel& spin1,
                                   const SpinChannel& spin2,
                                   const ResonanceAssignment& assignment,
                                   double tau, double phi, double target_ratio,
                                   double rabi,
                                   std::optional<double> magnitude_target) {
  require(target_ratio > 0.0, "calibrate_delays: target_ratio must be positive");
  require(assignment.size() == 2, "calibrate_delays: assignment must cover both spins");
  const SpinChannel spins[2] = {spin1, spin2};
  for (int i = 0; i < 2; ++i) {
    const double expected =
        resonance_tau(spins[i].omega_L, assignment[static_cast<size_t>(i)].n,
                      assignment[static_cast<size_t>(i)].sign, phi);
    if (std::abs(expected - tau) > 1e-9 * std::max(1.0, tau))
      throw config_error("calibrate_delays: spin is not on resonance at (tau, phi)");
  }

  const auto couplings = [&](double t1, double t2) {
    if (rabi == 0.0)
      return std::pair<double, double>{
          a_eff_composite(spin1.a_perp, spin1.omega_L, tau, t1, t2),
          a_eff_composite(spin2.a_perp, spin2.omega_L, tau, t1, t2)};
    return std::pair<double, double>{
        a_eff_finite(spin1.a_perp, spin1.omega_L, tau, t1, t2, rabi),
        a_eff_finite(spin2.a_perp, spin2.omega_L, tau, t1, t2, rabi)};
  };
  const double w = (rabi > 0.0) ? pi / rabi : 0.0;
  const double fit_limit = tau - 3.0 * w;  // tau1 + tau2 must stay below this
  // High resonance orders put tau (and with it the delay roots) far beyond
  // the half-period of the slowest nucleus, so the search spans whichever is
  // larger.
  const double window = std::max(
      (pi + phi) / (2.0 * std::min(spin1.omega_L, spin2.omega_L)), fit_limit);
  const auto feasible = [&](double t1, double t2) {
    return t1 >= 0.0 && t2 >= 0.0 && t1 + t2 <= fit_limit;
  };

  // Coarse grid: collect seeds near the ratio manifold.  With a pinned
  // magnitude, prefer seeds already close to it; otherwise prefer large
  // couplings (fastest gate).
  struct Seed {
    double t1, t2, mag, a2;
  };
  std::vector<Seed> seeds;
  const int N = 48;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double t1 = window * i / (N - 1);
      const double t2 = window * j / (N - 1);
      if (!feasible(t1, t2)) continue;
      const auto [a1, a2] = couplings(t1, t2);
      const double rel = std::abs(a1 - target_ratio * a2) /
                         (std::abs(a1) + std::abs(a2) + 1e-300);
      if (rel >= 0.2) continue;
      seeds.push_back({t1, t2, std::min(std::abs(a1), std::abs(a2)), a2});
    }
  }
  if (magnitude_target) {
    std::stable_sort(seeds.begin(), seeds.end(), [&](const Seed& a, const Seed& b) {
      return std::abs(a.a2 - *magnitude_target) < std::abs(b.a2 - *magnitude_target);
    });
  } else {
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Seed& a, const Seed& b) { return a.mag > b.mag; });
  }
  if (seeds.size() > 24) seeds.resize(24);

  CalibrationResult best;
  best.residual = std::numeric_limits<double>::infinity();
  double best_mag = -1.0;
  for (const auto& seed : seeds) {
    const double mt = magnitude_target.value_or(seed.a2);
    double t1 = seed.t1, t2 = seed.t2;
    for (int it = 0; it < 80; ++it) {
      const auto [a1, a2] = couplings(t1, t2);
      const double f1 = a1 - target_ratio * a2;
      const double f2 = a2 - mt;
      if (std::abs(f1) + std::abs(f2) < 1e-14) break;
      const double hh = 1e-8;
      const auto [a1p, a2p] = couplings(std::min(t1 + hh, window), t2);
      const auto [a1m, a2m] = couplings(std::max(t1 - hh, 0.0), t2);
      const auto [b1p, b2p] = couplings(t1, std::min(t2 + hh, window));
      const auto [b1m, b2m] = couplings(t1, std::max(t2 - hh, 0.0));
      const double j11 = (a1p - target_ratio * a2p - (a1m - target_ratio * a2m)) / (2.0 * hh);
      const double j12 = (b1p - target_ratio * b2p - (b1m - target_ratio * b2m)) / (2.0 * hh);
      const double j21 = (a2p - a2m) / (2.0 * hh);
      const double j22 = (b2p - b2m) / (2.0 * hh);
      const double det = j11 * j22 - j12 * j21;
      if (std::abs(det) < 1e-300) break;
      const double clamp = 0.1 * window;
      double d1 = -(j22 * f1 - j12 * f2) / det;
      double d2 = -(-j21 * f1 + j11 * f2) / det;
      d1 = std::clamp(d1, -clamp, clamp);
      d2 = std::clamp(d2, -clamp, clamp);
      t1 = std::clamp(t1 + d1, 0.0, window);
      t2 = std::clamp(t2 + d2, 0.0, window);
    }
    if (!feasible(t1, t2)) continue;
    const auto [a1, a2] = couplings(t1, t2);
    const double rel = std::abs(a1 / (target_ratio * a2) - 1.0);
    if (rel > 1e-6) continue;
    if (magnitude_target && std::abs(a2 / mt - 1.0) > 1e-6) continue;
    const double mag = std::min(std::abs(a1), std::abs(a2));
    const double resid = std::abs(a1 - target_ratio * a2) + std::abs(a2 - mt);
    // Prefer larger couplings; break ties lexicographically on
    // (residual, tau1, tau2) for determinism.  Residuals below 1e-12 are all
    // "converged" -- bucket them to zero so floating-point noise cannot pick
    // among root families and the smallest-tau1 family wins reproducibly.
    const double resid_key = (resid < 1e-12) ? 0.0 : resid;
    const double best_key = (best.residual < 1e-12) ? 0.0 : best.residual;
    const bool better =
        mag > best_mag * (1.0 + 1e-9) ||
        (mag > best_mag * (1.0 - 1e-9) &&
         std::make_tuple(resid_key, t1, t2) <
             std::make_tuple(best_key, best.tau1, best.tau2));
    if (better) {
      best = {t1, t2, a1, a2, resid};
      best_mag = mag;
    }
  }
  if (!std::isfinite(best.residual)) {
    std::ostringstream os;
    os << "calibrate_delays: no root found in window [0, " << window
       << "]^2; best grid ratio mismatch unresolved";
    throw calibration_error(os.str());
  }
  return best;
}

}  // namespace polgate
