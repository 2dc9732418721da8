#include "sun_gates/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sun_gates {

double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_deviation: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_deviation(a, b) <= tolerance;
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

VerificationReport make_report(std::string name, double deviation, double tolerance) {
  // NaN deviations must fail.
  const bool ok = std::isfinite(deviation) && deviation <= tolerance;
  return VerificationReport{std::move(name), deviation, tolerance, ok};
}

}  // namespace sun_gates
