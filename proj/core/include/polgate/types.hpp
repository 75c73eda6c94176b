#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace polgate {

using complexd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr complexd ii{0.0, 1.0};

// Default numerical tolerances used across the library.
inline constexpr double tol_hermiticity = 1e-12;
inline constexpr double tol_unitarity = 1e-10;
inline constexpr double tol_equality = 1e-9;

// Error taxonomy.  The command-line tools map these onto process exit codes:
// configuration problems -> 2, calibration failures -> 3, numerical
// failures -> 4.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

class calibration_error : public std::runtime_error {
 public:
  explicit calibration_error(const std::string& what) : std::runtime_error(what) {}
};

class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polgate
