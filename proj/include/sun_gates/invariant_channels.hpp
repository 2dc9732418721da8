#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "sun_gates/matrix.hpp"
#include "sun_gates/qudit_ops.hpp"
#include "sun_gates/sun_algebra.hpp"

namespace sun_gates {

enum class ChannelKind {
  SChannel,  // N (x) N   = S (+) A
  TChannel,  // N (x) Nbar = 1 (+) Adj
};

struct ChannelSpec {
  ChannelKind kind = ChannelKind::SChannel;
  int n = 3;

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

/// "s" / "t"
std::string_view channel_name(ChannelKind kind);
/// Accepts "s" or "t"; throws std::invalid_argument otherwise.
ChannelKind parse_channel(std::string_view name);
ChannelKind other_channel(ChannelKind kind);

/// p_plus is P_S (s-channel) or P_1 (t-channel); p_minus is P_A or P_Adj.
struct ProjectorSet {
  ChannelSpec channel;
  TwoQuditOperator p_plus;
  TwoQuditOperator p_minus;
};

/// s_identity = P_plus + P_minus, z_gate = P_plus - P_minus (S_W or U).
struct GateSet {
  ChannelSpec channel;
  TwoQuditOperator s_identity;
  TwoQuditOperator z_gate;
};

/// Projectors from the Kronecker-delta index formulas.
ProjectorSet build_projectors(ChannelSpec channel, const GeneratorSet& gens);

/// The same projectors assembled from the generator basis. In the t-channel the
/// second factor carries the conjugate generators Tbar^a = -(T^a)^*.
ProjectorSet build_projectors_generator_form(ChannelSpec channel, const GeneratorSet& gens);

GateSet build_gates(ChannelSpec channel, const GeneratorSet& gens);

/// U = (2/N^2 - 1) I(x)I - (4/N) sum_a T^a (x) Tbar^a.
TwoQuditOperator u_generator_form(const GeneratorSet& gens);

/// sum_a T^a (x) T^a (s-channel) or sum_a T^a (x) Tbar^a (t-channel).
TwoQuditOperator casimir_pairing(ChannelKind kind, const GeneratorSet& gens);

/// sum_i |ii> / sqrt(N)
StateVector singlet_state(int n);

/// sqrt(2) sum_ij (T^a)_ij |ij>, phase-fixed so the first nonzero entry is real positive.
std::vector<StateVector> adjoint_states(const GeneratorSet& gens);

struct ExponentialForm {
  TwoQuditOperator u_exp;
  double lambda_singlet = 0.0;
  double lambda_adjoint = 0.0;
};

/// U = exp[i pi (X - lambda_1) / (lambda_Adj - lambda_1)] with X = sum_a T^a (x) (T^a)^*.
/// Throws std::runtime_error unless X has exactly two eigenvalue clusters.
ExponentialForm u_exponential_form(const GeneratorSet& gens);

/// Eigenvalues of a Hermitian matrix grouped into clusters separated by more
/// than `gap`. Each cluster reports its mean and multiplicity.
struct EigenCluster {
  double value = 0.0;
  int multiplicity = 0;
  double spread = 0.0;  // max |eigenvalue - value| inside the cluster
};
std::vector<EigenCluster> hermitian_spectrum(const ComplexMatrix& m, double gap = 1e-6);

/// A relabelling of the four legs (out1, out2, in1, in2) of an operator:
/// O'_{x0 x1, x2 x3} = O_{x[p0] x[p1], x[p2] x[p3]}.
using LegPermutation = std::array<int, 4>;

TwoQuditOperator reshuffle(const TwoQuditOperator& op, const LegPermutation& perm);

/// Leg permutation realizing s-channel -> t-channel crossing:
/// O'_{ab,cd} = O_{ad,bc}.
inline constexpr LegPermutation kCrossingReshuffle{0, 3, 1, 2};

/// crossed(S_I) = (N/2)(S_I + U), crossed(S_W) = S_I.
TwoQuditOperator crossing_map(const TwoQuditOperator& op);
/// Inverse of crossing_map (t-channel -> s-channel).
TwoQuditOperator inverse_crossing_map(const TwoQuditOperator& op);

}  // namespace sun_gates
