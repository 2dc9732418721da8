#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sun_gates/amplitude_model.hpp"
#include "sun_gates/invariant_channels.hpp"
#include "sun_gates/matrix.hpp"

namespace sun_gates {

/// One-ancilla LCU plan for M = a S_I + b Z:
/// alpha = |a| + |b|, cos^2(gamma) = |a| / alpha, phases of a and b absorbed into
/// U_I = e^{i phi_a} S_I and U_Z = e^{i phi_b} Z.
struct BlockEncodingPlan {
  ChannelSpec channel;
  double alpha = 1.0;
  double gamma = 0.0;
  double phi_a = 0.0;
  double phi_b = 0.0;
};

struct CircuitGate {
  std::string name;    // "ry", "cz_gate" or "cs_identity"
  std::string target;  // "ancilla" for rotations, "system" for controlled gates
  double parameter = 0.0;  // rotation angle (ry) or phase (controlled gates)
  std::optional<int> control_value;
};

/// Gate list R_y(2 gamma), C1(U_Z), C0(U_I), R_y(-2 gamma) on one ancilla.
struct CircuitDescription {
  int n = 0;
  ChannelKind channel = ChannelKind::SChannel;
  double alpha = 1.0;
  int ancillas = 1;
  std::vector<CircuitGate> gates;
};

/// Throws std::invalid_argument for a = b = 0.
BlockEncodingPlan plan_encoding(const AmplitudeCoefficients& c);

/// R_y(theta) = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
ComplexMatrix ry(double theta);

/// W = (R_y(-2 gamma) (x) I) [|0><0| (x) U_I + |1><1| (x) U_Z] (R_y(2 gamma) (x) I),
/// ancilla as the most significant factor. Size 2N^2 x 2N^2.
ComplexMatrix build_w(const BlockEncodingPlan& plan, const GateSet& gates);

/// Rebuilds W by applying the gates of `circuit` in order.
ComplexMatrix build_w(const CircuitDescription& circuit, const GateSet& gates);

/// ||<0| W |0> - M / alpha||_max against `tolerance`.
VerificationReport verify_block(const ComplexMatrix& w, const TwoQuditOperator& m, double alpha,
                                double tolerance = kDefaultTolerance);

struct PostselectionResult {
  StateVector state;  // M psi / ||M psi||, or zero when annihilated
  double success_probability = 0.0;
  bool annihilated = false;
};

/// Runs |0>|psi> through W and keeps the ancilla-|0> branch.
/// Throws std::invalid_argument when psi is not normalized.
PostselectionResult apply_with_postselection(const BlockEncodingPlan& plan, const GateSet& gates,
                                             const StateVector& psi);

CircuitDescription export_circuit(const BlockEncodingPlan& plan);

nlohmann::json circuit_to_json(const CircuitDescription& circuit);
/// Throws std::invalid_argument on a malformed document.
CircuitDescription circuit_from_json(const nlohmann::json& doc);

}  // namespace sun_gates
