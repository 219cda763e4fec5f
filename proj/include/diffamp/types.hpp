#pragma once

#include <complex>

#include <Eigen/Dense>

namespace diffamp {

using Real = double;
using Complex = std::complex<double>;

using VectorXr = Eigen::VectorXd;
using VectorXc = Eigen::VectorXcd;
using MatrixXr = Eigen::MatrixXd;
using MatrixXc = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace diffamp
