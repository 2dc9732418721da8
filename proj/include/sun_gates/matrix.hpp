#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>

namespace sun_gates {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest entrywise |a_ij - b_ij|. Shapes must agree.
double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise comparison; there is deliberately no default tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance);

/// Largest entrywise modulus.
double max_abs(const ComplexMatrix& m);

/// Outcome of a numerical identity check.
struct VerificationReport {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

VerificationReport make_report(std::string name, double deviation, double tolerance);

}  // namespace sun_gates
