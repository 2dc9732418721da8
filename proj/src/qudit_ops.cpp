#include "sun_gates/qudit_ops.hpp"

#include <stdexcept>
#include <utility>

namespace sun_gates {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("tensor: both factors must be square");
  }
  const Eigen::Index na = a.rows();
  const Eigen::Index nb = b.rows();
  ComplexMatrix out(na * nb, na * nb);
  for (Eigen::Index k = 0; k < na; ++k) {
    for (Eigen::Index i = 0; i < na; ++i) {
      out.block(k * nb, i * nb, nb, nb) = a(k, i) * b;
    }
  }
  return out;
}

TwoQuditOperator::TwoQuditOperator(int n, ComplexMatrix matrix) : n_(n), matrix_(std::move(matrix)) {
  if (n_ < 1) throw std::invalid_argument("TwoQuditOperator: n must be positive");
  if (matrix_.rows() != n_ * n_ || matrix_.cols() != n_ * n_) {
    throw std::invalid_argument("TwoQuditOperator: matrix must be N^2 x N^2");
  }
}

TwoQuditOperator TwoQuditOperator::identity(int n) {
  return TwoQuditOperator(n, ComplexMatrix::Identity(n * n, n * n));
}

TwoQuditOperator TwoQuditOperator::zero(int n) {
  return TwoQuditOperator(n, ComplexMatrix::Zero(n * n, n * n));
}

namespace {

void require_same_n(const TwoQuditOperator& x, const TwoQuditOperator& y) {
  if (x.n() != y.n()) throw std::invalid_argument("TwoQuditOperator: dimension mismatch");
}

}  // namespace

TwoQuditOperator operator+(const TwoQuditOperator& x, const TwoQuditOperator& y) {
  require_same_n(x, y);
  return TwoQuditOperator(x.n(), x.matrix() + y.matrix());
}

TwoQuditOperator operator-(const TwoQuditOperator& x, const TwoQuditOperator& y) {
  require_same_n(x, y);
  return TwoQuditOperator(x.n(), x.matrix() - y.matrix());
}

TwoQuditOperator operator*(const TwoQuditOperator& x, const TwoQuditOperator& y) {
  require_same_n(x, y);
  return TwoQuditOperator(x.n(), x.matrix() * y.matrix());
}

TwoQuditOperator operator*(Complex s, const TwoQuditOperator& x) {
  return TwoQuditOperator(x.n(), s * x.matrix());
}

OperatorBasisDecomposition OperatorBasisDecomposition::zero(int n) {
  const int dim = n * n - 1;
  return OperatorBasisDecomposition{n, Complex(0.0, 0.0), Eigen::VectorXcd::Zero(dim),
                                    Eigen::VectorXcd::Zero(dim), ComplexMatrix::Zero(dim, dim)};
}

namespace {

// Tr(O (A (x) B)) = sum O_{kl,ij} A_ik B_jl, without forming the product.
Complex trace_against(const ComplexMatrix& op, const ComplexMatrix& a, const ComplexMatrix& b,
                      int n) {
  Complex sum = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int l = 0; l < n; ++l) {
        for (int j = 0; j < n; ++j) {
          sum += op(k * n + l, i * n + j) * aik * b(j, l);
        }
      }
    }
  }
  return sum;
}

}  // namespace

OperatorBasisDecomposition decompose(const TwoQuditOperator& op, const GeneratorSet& gens) {
  const int n = gens.n();
  if (op.n() != n) throw std::invalid_argument("decompose: dimension mismatch");
  const ComplexMatrix& m = op.matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const auto dim = static_cast<Eigen::Index>(gens.size());

  auto d = OperatorBasisDecomposition::zero(n);
  d.scalar = m.trace() / static_cast<double>(n * n);
  for (Eigen::Index a = 0; a < dim; ++a) {
    d.left(a) = (2.0 / n) * trace_against(m, gens[a], id, n);
    d.right(a) = (2.0 / n) * trace_against(m, id, gens[a], n);
    for (Eigen::Index b = 0; b < dim; ++b) {
      d.corr(a, b) = 4.0 * trace_against(m, gens[a], gens[b], n);
    }
  }
  return d;
}

TwoQuditOperator reconstruct(const OperatorBasisDecomposition& d, const GeneratorSet& gens) {
  const int n = gens.n();
  const auto dim = static_cast<Eigen::Index>(gens.size());
  if (d.n != n || d.left.size() != dim || d.right.size() != dim || d.corr.rows() != dim ||
      d.corr.cols() != dim) {
    throw std::invalid_argument("reconstruct: dimension mismatch");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix out = d.scalar * ComplexMatrix::Identity(n * n, n * n);
  for (Eigen::Index a = 0; a < dim; ++a) {
    out += d.left(a) * tensor(gens[a], id) + d.right(a) * tensor(id, gens[a]);
    ComplexMatrix partner = ComplexMatrix::Zero(n, n);
    for (Eigen::Index b = 0; b < dim; ++b) partner += d.corr(a, b) * gens[b];
    out += tensor(gens[a], partner);
  }
  return TwoQuditOperator(n, std::move(out));
}

}  // namespace sun_gates
