#pragma once

#include "sun_gates/matrix.hpp"
#include "sun_gates/sun_algebra.hpp"

namespace sun_gates {

/// Flattened index of the two-qudit basis state |k l>: k * N + l.
/// The first factor is the most significant one everywhere in this library.
constexpr int pair_index(int n, int first, int second) { return first * n + second; }

/// Kronecker product: (A (x) B)_{kN+l, iN+j} = A_ki B_lj. Both inputs square.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// An N^2 x N^2 operator on H_N (x) H_N. Rows index the outgoing pair (k,l),
/// columns the incoming pair (i,j).
class TwoQuditOperator {
 public:
  TwoQuditOperator(int n, ComplexMatrix matrix);

  static TwoQuditOperator identity(int n);
  static TwoQuditOperator zero(int n);

  int n() const { return n_; }
  int dim() const { return n_ * n_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// <kl| O |ij>
  Complex element(int k, int l, int i, int j) const {
    return matrix_(pair_index(n_, k, l), pair_index(n_, i, j));
  }

 private:
  int n_;
  ComplexMatrix matrix_;
};

TwoQuditOperator operator+(const TwoQuditOperator& x, const TwoQuditOperator& y);
TwoQuditOperator operator-(const TwoQuditOperator& x, const TwoQuditOperator& y);
TwoQuditOperator operator*(const TwoQuditOperator& x, const TwoQuditOperator& y);
TwoQuditOperator operator*(Complex s, const TwoQuditOperator& x);

/// Coefficients of O = scalar I(x)I + left_a T^a(x)I + right_a I(x)T^a + corr_ab T^a(x)T^b.
/// `corr` stores c_ab itself, not c_ab / 4.
struct OperatorBasisDecomposition {
  int n = 0;
  Complex scalar{0.0, 0.0};
  Eigen::VectorXcd left;
  Eigen::VectorXcd right;
  ComplexMatrix corr;

  static OperatorBasisDecomposition zero(int n);
};

/// scalar = Tr(O)/N^2, left_a = (2/N) Tr(O T^a(x)I), right_a = (2/N) Tr(O I(x)T^a),
/// corr_ab = 4 Tr(O T^a(x)T^b).
OperatorBasisDecomposition decompose(const TwoQuditOperator& op, const GeneratorSet& gens);

TwoQuditOperator reconstruct(const OperatorBasisDecomposition& d, const GeneratorSet& gens);

}  // namespace sun_gates
