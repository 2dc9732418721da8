#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sun_gates/matrix.hpp"

namespace sun_gates {

inline constexpr double kDefaultTolerance = 1e-10;

/// The N^2-1 generators of SU(N) in the fundamental representation,
/// normalized as Tr(T^a T^b) = delta_ab / 2.
///
/// Ordering follows the generalized Gell-Mann convention: for each column
/// k = 1..N-1 the symmetric and antisymmetric off-diagonal generators for
/// rows j < k, then the k-th diagonal generator. For N = 3 this is the
/// textbook lambda_1..lambda_8 / 2.
class GeneratorSet {
 public:
  GeneratorSet(int n, std::vector<ComplexMatrix> generators);

  int n() const { return n_; }
  std::size_t size() const { return generators_.size(); }
  const ComplexMatrix& operator[](std::size_t a) const { return generators_[a]; }
  std::span<const ComplexMatrix> generators() const { return generators_; }

 private:
  int n_;
  std::vector<ComplexMatrix> generators_;
};

/// Throws std::domain_error for n < 2.
GeneratorSet build_generators(int n);

/// Real, totally antisymmetric f_abc with [T^a, T^b] = i f_abc T^c.
class StructureConstants {
 public:
  StructureConstants(int n, std::vector<double> values);

  int n() const { return n_; }
  std::size_t dim() const { return dim_; }
  double operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return values_[(a * dim_ + b) * dim_ + c];
  }
  std::span<const double> values() const { return values_; }

 private:
  int n_;
  std::size_t dim_;
  std::vector<double> values_;
};

/// f_abc = -2i Tr([T^a, T^b] T^c). Throws std::runtime_error if any
/// extracted value carries an imaginary part above `tolerance`.
StructureConstants structure_constants(const GeneratorSet& gens,
                                       double tolerance = kDefaultTolerance);

/// max |sum_a (T^a)_ij (T^a)_kl - (delta_il delta_jk - delta_ij delta_kl / N) / 2|
/// over every index tuple.
VerificationReport verify_completeness(const GeneratorSet& gens,
                                       double tolerance = kDefaultTolerance);

VerificationReport verify_hermiticity(const GeneratorSet& gens,
                                      double tolerance = kDefaultTolerance);
VerificationReport verify_tracelessness(const GeneratorSet& gens,
                                        double tolerance = kDefaultTolerance);
/// Tr(T^a T^b) = delta_ab / 2 over all pairs.
VerificationReport verify_orthonormality(const GeneratorSet& gens,
                                         double tolerance = kDefaultTolerance);

/// Max |[T^a,T^b] - i f_abc T^c| over all pairs.
VerificationReport verify_lie_bracket(const GeneratorSet& gens,
                                      const StructureConstants& f,
                                      double tolerance = kDefaultTolerance);

/// Max |f_ade f_bcd + f_bde f_cad + f_cde f_abd| over all (a, b, c, e).
VerificationReport verify_jacobi(const StructureConstants& f,
                                 double tolerance = kDefaultTolerance);

/// Max |f_abc + f_bac| and |f_abc + f_acb| over all triples.
VerificationReport verify_antisymmetry(const StructureConstants& f,
                                       double tolerance = kDefaultTolerance);

}  // namespace sun_gates
