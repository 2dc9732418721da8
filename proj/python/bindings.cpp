#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "sun_gates/amplitude_model.hpp"
#include "sun_gates/identity_suite.hpp"
#include "sun_gates/invariant_channels.hpp"
#include "sun_gates/lcu_encoder.hpp"
#include "sun_gates/qudit_ops.hpp"
#include "sun_gates/sun_algebra.hpp"

namespace py = pybind11;
using namespace sun_gates;

namespace {

ChannelSpec channel_of(const std::string& name, int n) { return {parse_channel(name), n}; }

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["identity"] = r.name;
  d["max_deviation"] = r.max_deviation;
  d["tolerance"] = r.tolerance;
  d["passed"] = r.passed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SU(N)-invariant two-qudit scattering gates";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  m.def("build_generators", [](int n) {
    const auto gens = build_generators(n);
    return std::vector<ComplexMatrix>(gens.generators().begin(), gens.generators().end());
  }, py::arg("n"), "SU(N) generators, Tr(T^a T^b) = delta_ab / 2.");

  m.def("structure_constants", [](int n) {
    const auto f = structure_constants(build_generators(n));
    const auto dim = static_cast<py::ssize_t>(f.dim());
    py::array_t<double> out({dim, dim, dim});
    auto view = out.mutable_unchecked<3>();
    for (py::ssize_t a = 0; a < dim; ++a)
      for (py::ssize_t b = 0; b < dim; ++b)
        for (py::ssize_t c = 0; c < dim; ++c) view(a, b, c) = f(a, b, c);
    return out;
  }, py::arg("n"));

  m.def("verify_completeness", [](int n, double tol) {
    return report_dict(verify_completeness(build_generators(n), tol));
  }, py::arg("n"), py::arg("tolerance") = kDefaultTolerance);

  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));

  m.def("decompose", [](const ComplexMatrix& op, int n) {
    const auto d = decompose(TwoQuditOperator(n, op), build_generators(n));
    py::dict out;
    out["scalar"] = d.scalar;
    out["left"] = d.left;
    out["right"] = d.right;
    out["corr"] = d.corr;
    return out;
  }, py::arg("op"), py::arg("n"));

  m.def("reconstruct", [](int n, Complex scalar, const Eigen::VectorXcd& left,
                          const Eigen::VectorXcd& right, const ComplexMatrix& corr) {
    const OperatorBasisDecomposition d{n, scalar, left, right, corr};
    return reconstruct(d, build_generators(n)).matrix();
  }, py::arg("n"), py::arg("scalar"), py::arg("left"), py::arg("right"), py::arg("corr"));

  m.def("build_projectors", [](const std::string& channel, int n) {
    const auto p = build_projectors(channel_of(channel, n), build_generators(n));
    return py::make_tuple(p.p_plus.matrix(), p.p_minus.matrix());
  }, py::arg("channel"), py::arg("n"), "(P_plus, P_minus) for channel 's' or 't'.");

  m.def("build_gates", [](const std::string& channel, int n) {
    const auto g = build_gates(channel_of(channel, n), build_generators(n));
    return py::make_tuple(g.s_identity.matrix(), g.z_gate.matrix());
  }, py::arg("channel"), py::arg("n"), "(S_I, Z) for channel 's' or 't'.");

  m.def("singlet_state", &singlet_state, py::arg("n"));
  m.def("adjoint_states", [](int n) { return adjoint_states(build_generators(n)); }, py::arg("n"));

  m.def("u_exponential_form", [](int n) {
    const auto e = u_exponential_form(build_generators(n));
    return py::make_tuple(e.u_exp.matrix(), e.lambda_singlet, e.lambda_adjoint);
  }, py::arg("n"));

  m.def("crossing_map", [](const ComplexMatrix& op, int n) {
    return crossing_map(TwoQuditOperator(n, op)).matrix();
  }, py::arg("op"), py::arg("n"));
  m.def("inverse_crossing_map", [](const ComplexMatrix& op, int n) {
    return inverse_crossing_map(TwoQuditOperator(n, op)).matrix();
  }, py::arg("op"), py::arg("n"));

  m.def("amplitude_operator", [](const std::string& channel, int n, Complex a, Complex b) {
    const auto spec = channel_of(channel, n);
    return amplitude_operator({spec, a, b}, build_gates(spec, build_generators(n))).matrix();
  }, py::arg("channel"), py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("scalar_amplitudes", [](const ComplexMatrix& op, const std::string& channel, int n) {
    return scalar_amplitudes(TwoQuditOperator(n, op),
                             build_projectors(channel_of(channel, n), build_generators(n)));
  }, py::arg("op"), py::arg("channel"), py::arg("n"));

  m.def("invariance_residual", [](const ComplexMatrix& op, const std::string& channel, int n) {
    return invariance_residual(TwoQuditOperator(n, op),
                               build_projectors(channel_of(channel, n), build_generators(n)));
  }, py::arg("op"), py::arg("channel"), py::arg("n"));

  m.def("cross_coefficients", [](const std::string& channel, int n, Complex a, Complex b) {
    const auto c = cross_coefficients({channel_of(channel, n), a, b});
    return py::make_tuple(std::string(channel_name(c.channel.kind)), c.a, c.b);
  }, py::arg("channel"), py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("unitary_parameterization", [](double theta, double phi) {
    const GateSet dummy{{ChannelKind::SChannel, 2}, TwoQuditOperator::identity(2),
                        TwoQuditOperator::identity(2)};
    const auto c = unitary_parameterization(theta, phi, dummy);
    return py::make_tuple(c.a, c.b);
  }, py::arg("theta"), py::arg("phi"));

  m.def("check_partial_wave", [](int j, Complex a, Complex b, double kappa, double tol) {
    const auto r = check_partial_wave({j, a, b, kappa}, tol);
    py::dict d;
    d["norm_sq"] = r.norm_sq;
    d["bound_satisfied"] = r.bound_satisfied;
    d["eigen_plus"] = r.eigen_plus;
    d["eigen_minus"] = r.eigen_minus;
    d["in_unit_disk_plus"] = r.in_unit_disk_plus;
    d["in_unit_disk_minus"] = r.in_unit_disk_minus;
    d["elastic_saturation"] = r.elastic_saturation;
    return d;
  }, py::arg("j"), py::arg("a"), py::arg("b"), py::arg("kappa"),
     py::arg("tolerance") = kDefaultTolerance);

  m.def("disk_samples", [](int resolution) {
    std::vector<py::tuple> rows;
    for (const auto& s : disk_samples(resolution)) {
      rows.push_back(py::make_tuple(s.theta, s.phi, s.a, s.b, s.norm_sq, s.boundary));
    }
    return rows;
  }, py::arg("resolution"), "Rows (theta, phi, a, b, norm_sq, boundary).");

  m.def("plan_encoding", [](const std::string& channel, int n, Complex a, Complex b) {
    const auto p = plan_encoding({channel_of(channel, n), a, b});
    py::dict d;
    d["alpha"] = p.alpha;
    d["gamma"] = p.gamma;
    d["phi_a"] = p.phi_a;
    d["phi_b"] = p.phi_b;
    return d;
  }, py::arg("channel"), py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("build_w", [](const std::string& channel, int n, Complex a, Complex b) {
    const auto spec = channel_of(channel, n);
    return build_w(plan_encoding({spec, a, b}), build_gates(spec, build_generators(n)));
  }, py::arg("channel"), py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("apply_with_postselection", [](const std::string& channel, int n, Complex a, Complex b,
                                       const StateVector& psi) {
    const auto spec = channel_of(channel, n);
    const auto r = apply_with_postselection(plan_encoding({spec, a, b}),
                                            build_gates(spec, build_generators(n)), psi);
    return py::make_tuple(r.state, r.success_probability, r.annihilated);
  }, py::arg("channel"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("psi"));

  m.def("export_circuit_json", [](const std::string& channel, int n, Complex a, Complex b) {
    return circuit_to_json(export_circuit(plan_encoding({channel_of(channel, n), a, b}))).dump();
  }, py::arg("channel"), py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("run_identity_suite", [](const std::string& channel, int n, double tol, std::uint64_t seed) {
    py::list out;
    for (const auto& r : run_identity_suite(channel_of(channel, n), tol, seed)) {
      out.append(report_dict(r));
    }
    return out;
  }, py::arg("channel"), py::arg("n"), py::arg("tolerance") = kDefaultTolerance,
     py::arg("seed") = 0);
}
