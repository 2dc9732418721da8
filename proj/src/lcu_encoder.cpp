#include "sun_gates/lcu_encoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sun_gates {

BlockEncodingPlan plan_encoding(const AmplitudeCoefficients& c) {
  const double abs_a = std::abs(c.a);
  const double abs_b = std::abs(c.b);
  const double alpha = abs_a + abs_b;
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("plan_encoding: the zero amplitude has no block encoding");
  }
  BlockEncodingPlan plan;
  plan.channel = c.channel;
  plan.alpha = alpha;
  plan.gamma = std::acos(std::min(1.0, std::sqrt(abs_a / alpha)));
  // arg(0) is undefined; the corresponding branch carries zero weight anyway.
  plan.phi_a = abs_a > 0.0 ? std::arg(c.a) : 0.0;
  plan.phi_b = abs_b > 0.0 ? std::arg(c.b) : 0.0;
  return plan;
}

ComplexMatrix ry(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  ComplexMatrix r(2, 2);
  r << c, -s, s, c;
  return r;
}

namespace {

void require_channel(ChannelSpec expected, const GateSet& gates) {
  if (!(expected == gates.channel)) {
    throw std::invalid_argument("LCU: plan channel does not match gate set");
  }
}

ComplexMatrix select(const ComplexMatrix& u_zero, const ComplexMatrix& u_one) {
  const Eigen::Index d = u_zero.rows();
  ComplexMatrix out = ComplexMatrix::Zero(2 * d, 2 * d);
  out.topLeftCorner(d, d) = u_zero;
  out.bottomRightCorner(d, d) = u_one;
  return out;
}

}  // namespace

ComplexMatrix build_w(const BlockEncodingPlan& plan, const GateSet& gates) {
  require_channel(plan.channel, gates);
  const Eigen::Index d = gates.s_identity.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix u_i = std::polar(1.0, plan.phi_a) * gates.s_identity.matrix();
  const ComplexMatrix u_z = std::polar(1.0, plan.phi_b) * gates.z_gate.matrix();
  return tensor(ry(-2.0 * plan.gamma), id) * select(u_i, u_z) * tensor(ry(2.0 * plan.gamma), id);
}

ComplexMatrix build_w(const CircuitDescription& circuit, const GateSet& gates) {
  require_channel(ChannelSpec{circuit.channel, circuit.n}, gates);
  const Eigen::Index d = gates.s_identity.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix w = ComplexMatrix::Identity(2 * d, 2 * d);
  for (const auto& g : circuit.gates) {
    ComplexMatrix step;
    if (g.name == "ry") {
      step = tensor(ry(g.parameter), id);
    } else if (g.name == "cz_gate" || g.name == "cs_identity") {
      const ComplexMatrix& base =
          g.name == "cz_gate" ? gates.z_gate.matrix() : gates.s_identity.matrix();
      const ComplexMatrix u = std::polar(1.0, g.parameter) * base;
      const int control = g.control_value.value_or(1);
      step = control == 1 ? select(id, u) : select(u, id);
    } else {
      throw std::invalid_argument("build_w: unknown gate '" + g.name + "'");
    }
    w = step * w;
  }
  return w;
}

VerificationReport verify_block(const ComplexMatrix& w, const TwoQuditOperator& m, double alpha,
                                double tolerance) {
  const Eigen::Index d = m.dim();
  if (w.rows() != 2 * d || w.cols() != 2 * d) {
    throw std::invalid_argument("verify_block: W must be 2N^2 x 2N^2");
  }
  const ComplexMatrix block = w.topLeftCorner(d, d);
  return make_report("block_encoding", max_abs_deviation(block, m.matrix() / alpha), tolerance);
}

PostselectionResult apply_with_postselection(const BlockEncodingPlan& plan, const GateSet& gates,
                                             const StateVector& psi) {
  const Eigen::Index d = gates.s_identity.dim();
  if (psi.size() != d) throw std::invalid_argument("apply_with_postselection: wrong state length");
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("apply_with_postselection: input state is not normalized");
  }
  StateVector full = StateVector::Zero(2 * d);
  full.head(d) = psi;
  const StateVector out = build_w(plan, gates) * full;

  PostselectionResult r;
  const StateVector branch = out.head(d);  // ancilla |0>, equals M psi / alpha
  r.success_probability = branch.squaredNorm();
  const double norm = branch.norm();
  if (norm <= 1e-12) {
    r.annihilated = true;
    r.state = StateVector::Zero(d);
  } else {
    r.state = branch / norm;
  }
  return r;
}

CircuitDescription export_circuit(const BlockEncodingPlan& plan) {
  CircuitDescription c;
  c.n = plan.channel.n;
  c.channel = plan.channel.kind;
  c.alpha = plan.alpha;
  c.ancillas = 1;
  c.gates = {
      CircuitGate{"ry", "ancilla", 2.0 * plan.gamma, std::nullopt},
      CircuitGate{"cz_gate", "system", plan.phi_b, 1},
      CircuitGate{"cs_identity", "system", plan.phi_a, 0},
      CircuitGate{"ry", "ancilla", -2.0 * plan.gamma, std::nullopt},
  };
  return c;
}

nlohmann::json circuit_to_json(const CircuitDescription& circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : circuit.gates) {
    if (g.name == "ry") {
      gates.push_back({{"name", g.name}, {"target", g.target}, {"theta", g.parameter}});
    } else {
      gates.push_back(
          {{"name", g.name}, {"control_value", g.control_value.value_or(1)}, {"phase", g.parameter}});
    }
  }
  return {{"version", 1},
          {"n", circuit.n},
          {"channel", std::string(channel_name(circuit.channel))},
          {"alpha", circuit.alpha},
          {"gates", std::move(gates)}};
}

CircuitDescription circuit_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("version").get<int>() != 1) {
      throw std::invalid_argument("circuit_from_json: unsupported version");
    }
    CircuitDescription c;
    c.n = doc.at("n").get<int>();
    c.channel = parse_channel(doc.at("channel").get<std::string>());
    c.alpha = doc.at("alpha").get<double>();
    for (const auto& g : doc.at("gates")) {
      CircuitGate gate;
      gate.name = g.at("name").get<std::string>();
      if (gate.name == "ry") {
        gate.target = g.at("target").get<std::string>();
        gate.parameter = g.at("theta").get<double>();
      } else {
        gate.target = "system";
        gate.control_value = g.at("control_value").get<int>();
        gate.parameter = g.at("phase").get<double>();
      }
      c.gates.push_back(std::move(gate));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("circuit_from_json: ") + e.what());
  }
}

}  // namespace sun_gates
