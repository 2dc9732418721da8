#include "sun_gates/sun_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace sun_gates {

GeneratorSet::GeneratorSet(int n, std::vector<ComplexMatrix> generators)
    : n_(n), generators_(std::move(generators)) {
  if (n_ < 2) throw std::domain_error("GeneratorSet: n must be >= 2");
  const auto expected = static_cast<std::size_t>(n_ * n_ - 1);
  if (generators_.size() != expected) {
    throw std::invalid_argument("GeneratorSet: expected N^2-1 generators");
  }
  for (const auto& t : generators_) {
    if (t.rows() != n_ || t.cols() != n_) {
      throw std::invalid_argument("GeneratorSet: generator is not N x N");
    }
  }
}

GeneratorSet build_generators(int n) {
  if (n < 2) {
    throw std::domain_error("build_generators: qudit dimension must be >= 2, got " +
                            std::to_string(n));
  }
  const Complex i_unit(0.0, 1.0);
  std::vector<ComplexMatrix> gens;
  gens.reserve(static_cast<std::size_t>(n * n - 1));

  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      ComplexMatrix sym = ComplexMatrix::Zero(n, n);
      sym(j, k) = 0.5;
      sym(k, j) = 0.5;
      gens.push_back(std::move(sym));

      ComplexMatrix anti = ComplexMatrix::Zero(n, n);
      anti(j, k) = -0.5 * i_unit;
      anti(k, j) = 0.5 * i_unit;
      gens.push_back(std::move(anti));
    }
    // diag(1, ..., 1, -k, 0, ...) / sqrt(2k(k+1))
    const double scale = 1.0 / std::sqrt(2.0 * k * (k + 1));
    ComplexMatrix diag = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < k; ++j) diag(j, j) = scale;
    diag(k, k) = -static_cast<double>(k) * scale;
    gens.push_back(std::move(diag));
  }
  return GeneratorSet(n, std::move(gens));
}

StructureConstants::StructureConstants(int n, std::vector<double> values)
    : n_(n), dim_(static_cast<std::size_t>(n * n - 1)), values_(std::move(values)) {
  if (values_.size() != dim_ * dim_ * dim_) {
    throw std::invalid_argument("StructureConstants: expected (N^2-1)^3 values");
  }
}

StructureConstants structure_constants(const GeneratorSet& gens, double tolerance) {
  const std::size_t dim = gens.size();
  std::vector<double> values(dim * dim * dim, 0.0);
  const Complex minus_two_i(0.0, -2.0);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const ComplexMatrix bracket = gens[a] * gens[b] - gens[b] * gens[a];
      for (std::size_t c = 0; c < dim; ++c) {
        const Complex f = minus_two_i * (bracket * gens[c]).trace();
        if (std::abs(f.imag()) > tolerance) {
          throw std::runtime_error("structure_constants: f_" + std::to_string(a + 1) + "," +
                                   std::to_string(b + 1) + "," + std::to_string(c + 1) +
                                   " has imaginary part " + std::to_string(f.imag()));
        }
        values[(a * dim + b) * dim + c] = f.real();
      }
    }
  }
  return StructureConstants(gens.n(), std::move(values));
}

VerificationReport verify_completeness(const GeneratorSet& gens, double tolerance) {
  const int n = gens.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Complex sum = 0.0;
          for (const auto& t : gens.generators()) sum += t(i, j) * t(k, l);
          const double expected =
              0.5 * ((i == l && j == k ? 1.0 : 0.0) - (i == j && k == l ? 1.0 / n : 0.0));
          worst = std::max(worst, std::abs(sum - expected));
        }
      }
    }
  }
  return make_report("completeness", worst, tolerance);
}

VerificationReport verify_hermiticity(const GeneratorSet& gens, double tolerance) {
  double worst = 0.0;
  for (const auto& t : gens.generators()) {
    worst = std::max(worst, max_abs_deviation(t, t.adjoint()));
  }
  return make_report("hermiticity", worst, tolerance);
}

VerificationReport verify_tracelessness(const GeneratorSet& gens, double tolerance) {
  double worst = 0.0;
  for (const auto& t : gens.generators()) worst = std::max(worst, std::abs(t.trace()));
  return make_report("tracelessness", worst, tolerance);
}

VerificationReport verify_orthonormality(const GeneratorSet& gens, double tolerance) {
  double worst = 0.0;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const Complex tr = (gens[a] * gens[b]).trace();
      worst = std::max(worst, std::abs(tr - (a == b ? 0.5 : 0.0)));
    }
  }
  return make_report("trace_orthonormality", worst, tolerance);
}

VerificationReport verify_lie_bracket(const GeneratorSet& gens, const StructureConstants& f,
                                      double tolerance) {
  const std::size_t dim = gens.size();
  const Complex i_unit(0.0, 1.0);
  double worst = 0.0;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      ComplexMatrix residual = gens[a] * gens[b] - gens[b] * gens[a];
      for (std::size_t c = 0; c < dim; ++c) residual -= i_unit * f(a, b, c) * gens[c];
      worst = std::max(worst, max_abs(residual));
    }
  }
  return make_report("lie_bracket", worst, tolerance);
}

VerificationReport verify_jacobi(const StructureConstants& f, double tolerance) {
  const std::size_t dim = f.dim();
  double worst = 0.0;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t e = 0; e < dim; ++e) {
          double sum = 0.0;
          for (std::size_t d = 0; d < dim; ++d) {
            sum += f(a, d, e) * f(b, c, d) + f(b, d, e) * f(c, a, d) + f(c, d, e) * f(a, b, d);
          }
          worst = std::max(worst, std::abs(sum));
        }
      }
    }
  }
  return make_report("jacobi", worst, tolerance);
}

VerificationReport verify_antisymmetry(const StructureConstants& f, double tolerance) {
  const std::size_t dim = f.dim();
  double worst = 0.0;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      for (std::size_t c = 0; c < dim; ++c) {
        worst = std::max(worst, std::abs(f(a, b, c) + f(b, a, c)));
        worst = std::max(worst, std::abs(f(a, b, c) + f(a, c, b)));
      }
    }
  }
  return make_report("total_antisymmetry", worst, tolerance);
}

}  // namespace sun_gates
