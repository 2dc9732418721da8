#include "sun_gates/invariant_channels.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace sun_gates {

std::string_view channel_name(ChannelKind kind) {
  return kind == ChannelKind::SChannel ? "s" : "t";
}

ChannelKind parse_channel(std::string_view name) {
  if (name == "s") return ChannelKind::SChannel;
  if (name == "t") return ChannelKind::TChannel;
  throw std::invalid_argument("unknown channel '" + std::string(name) + "' (expected s or t)");
}

ChannelKind other_channel(ChannelKind kind) {
  return kind == ChannelKind::SChannel ? ChannelKind::TChannel : ChannelKind::SChannel;
}

namespace {

void require_match(ChannelSpec channel, const GeneratorSet& gens) {
  if (channel.n != gens.n()) {
    throw std::invalid_argument("channel dimension " + std::to_string(channel.n) +
                                " does not match generator dimension " +
                                std::to_string(gens.n()));
  }
}

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

}  // namespace

ProjectorSet build_projectors(ChannelSpec channel, const GeneratorSet& gens) {
  require_match(channel, gens);
  const int n = channel.n;
  const int d = n * n;
  ComplexMatrix plus(d, d);
  ComplexMatrix minus(d, d);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const int row = pair_index(n, k, l);
          const int col = pair_index(n, i, j);
          if (channel.kind == ChannelKind::SChannel) {
            // (P_S/A)_{kl,ij} = (d_ki d_lj +/- d_li d_kj) / 2
            const double direct = delta(k, i) * delta(l, j);
            const double swapped = delta(l, i) * delta(k, j);
            plus(row, col) = 0.5 * (direct + swapped);
            minus(row, col) = 0.5 * (direct - swapped);
          } else {
            // (P_1)_{kl,ij} = d_kl d_ij / N, P_Adj = 1 - P_1
            const double singlet = delta(k, l) * delta(i, j) / n;
            plus(row, col) = singlet;
            minus(row, col) = delta(k, i) * delta(l, j) - singlet;
          }
        }
      }
    }
  }
  return ProjectorSet{channel, TwoQuditOperator(n, std::move(plus)),
                      TwoQuditOperator(n, std::move(minus))};
}

TwoQuditOperator casimir_pairing(ChannelKind kind, const GeneratorSet& gens) {
  const int n = gens.n();
  ComplexMatrix sum = ComplexMatrix::Zero(n * n, n * n);
  for (const auto& t : gens.generators()) {
    if (kind == ChannelKind::SChannel) {
      sum += tensor(t, t);
    } else {
      sum -= tensor(t, t.conjugate());
    }
  }
  return TwoQuditOperator(n, std::move(sum));
}

ProjectorSet build_projectors_generator_form(ChannelSpec channel, const GeneratorSet& gens) {
  require_match(channel, gens);
  const int n = channel.n;
  const double nd = n;
  const auto id = TwoQuditOperator::identity(n);
  const auto pairing = casimir_pairing(channel.kind, gens);
  if (channel.kind == ChannelKind::SChannel) {
    return ProjectorSet{channel, (nd + 1.0) / (2.0 * nd) * id + pairing,
                        (nd - 1.0) / (2.0 * nd) * id - pairing};
  }
  return ProjectorSet{channel, 1.0 / (nd * nd) * id - 2.0 / nd * pairing,
                      (1.0 - 1.0 / (nd * nd)) * id + 2.0 / nd * pairing};
}

GateSet build_gates(ChannelSpec channel, const GeneratorSet& gens) {
  const auto projs = build_projectors(channel, gens);
  return GateSet{channel, projs.p_plus + projs.p_minus, projs.p_plus - projs.p_minus};
}

TwoQuditOperator u_generator_form(const GeneratorSet& gens) {
  const double nd = gens.n();
  return (2.0 / (nd * nd) - 1.0) * TwoQuditOperator::identity(gens.n()) -
         4.0 / nd * casimir_pairing(ChannelKind::TChannel, gens);
}

StateVector singlet_state(int n) {
  if (n < 2) throw std::domain_error("singlet_state: n must be >= 2");
  StateVector psi = StateVector::Zero(n * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) psi(pair_index(n, i, i)) = amp;
  return psi;
}

namespace {

void fix_phase(StateVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-14) {
      v *= std::conj(v(i)) / std::abs(v(i));
      return;
    }
  }
}

}  // namespace

std::vector<StateVector> adjoint_states(const GeneratorSet& gens) {
  const int n = gens.n();
  std::vector<StateVector> states;
  states.reserve(gens.size());
  for (const auto& t : gens.generators()) {
    StateVector v(n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) v(pair_index(n, i, j)) = t(i, j);
    }
    v /= v.norm();
    fix_phase(v);
    states.push_back(std::move(v));
  }
  return states;
}

std::vector<EigenCluster> hermitian_spectrum(const ComplexMatrix& m, double gap) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_spectrum: eigensolver failed");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  std::vector<EigenCluster> clusters;
  std::vector<double> members;
  auto flush = [&] {
    if (members.empty()) return;
    double mean = 0.0;
    for (double x : members) mean += x;
    mean /= static_cast<double>(members.size());
    double spread = 0.0;
    for (double x : members) spread = std::max(spread, std::abs(x - mean));
    clusters.push_back({mean, static_cast<int>(members.size()), spread});
    members.clear();
  };
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!members.empty() && values(i) - members.back() > gap) flush();
    members.push_back(values(i));
  }
  flush();
  return clusters;
}

ExponentialForm u_exponential_form(const GeneratorSet& gens) {
  const int n = gens.n();
  const ComplexMatrix x = -casimir_pairing(ChannelKind::TChannel, gens).matrix();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("u_exponential_form: eigensolver failed");
  }
  const auto clusters = hermitian_spectrum(x);
  if (clusters.size() != 2) {
    throw std::runtime_error("u_exponential_form: X has " + std::to_string(clusters.size()) +
                             " distinct eigenvalues, expected 2");
  }
  const StateVector singlet = singlet_state(n);
  const double lambda_singlet = (singlet.adjoint() * x * singlet)(0, 0).real();
  const auto& other = std::abs(clusters[0].value - lambda_singlet) <
                              std::abs(clusters[1].value - lambda_singlet)
                          ? clusters[1]
                          : clusters[0];
  const double lambda_adjoint = other.value;

  const double scale = std::numbers::pi / (lambda_adjoint - lambda_singlet);
  const Eigen::VectorXd& evals = solver.eigenvalues();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    phases(i) = std::polar(1.0, scale * (evals(i) - lambda_singlet));
  }
  const ComplexMatrix& vecs = solver.eigenvectors();
  ComplexMatrix u_exp = vecs * phases.asDiagonal() * vecs.adjoint();
  return ExponentialForm{TwoQuditOperator(n, std::move(u_exp)), lambda_singlet, lambda_adjoint};
}

TwoQuditOperator reshuffle(const TwoQuditOperator& op, const LegPermutation& perm) {
  const int n = op.n();
  ComplexMatrix out(n * n, n * n);
  std::array<int, 4> legs{};
  for (legs[0] = 0; legs[0] < n; ++legs[0]) {
    for (legs[1] = 0; legs[1] < n; ++legs[1]) {
      for (legs[2] = 0; legs[2] < n; ++legs[2]) {
        for (legs[3] = 0; legs[3] < n; ++legs[3]) {
          out(pair_index(n, legs[0], legs[1]), pair_index(n, legs[2], legs[3])) =
              op.element(legs[perm[0]], legs[perm[1]], legs[perm[2]], legs[perm[3]]);
        }
      }
    }
  }
  return TwoQuditOperator(n, std::move(out));
}

TwoQuditOperator crossing_map(const TwoQuditOperator& op) {
  return reshuffle(op, kCrossingReshuffle);
}

TwoQuditOperator inverse_crossing_map(const TwoQuditOperator& op) {
  // O'_{x0 x1, x2 x3} = O_{x[p0] .. x[p3]} is undone by the inverse permutation.
  LegPermutation inverse{};
  for (int i = 0; i < 4; ++i) inverse[kCrossingReshuffle[i]] = i;
  return reshuffle(op, inverse);
}

}  // namespace sun_gates
