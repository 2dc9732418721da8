#include "sun_gates/identity_suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sun_gates/amplitude_model.hpp"
#include "sun_gates/lcu_encoder.hpp"
#include "sun_gates/qudit_ops.hpp"
#include "sun_gates/sun_algebra.hpp"

namespace sun_gates {

namespace {

double projector_deviation_from_trace(const TwoQuditOperator& p, double expected) {
  return std::abs(p.matrix().trace() - expected);
}

ComplexMatrix swap_permutation(int n) {
  ComplexMatrix sw = ComplexMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sw(pair_index(n, j, i), pair_index(n, i, j)) = 1.0;
  }
  return sw;
}

}  // namespace

std::vector<VerificationReport> run_identity_suite(ChannelSpec channel, double tolerance,
                                                   std::uint64_t seed, int random_samples) {
  std::vector<VerificationReport> out;
  const int n = channel.n;
  const double nd = n;
  const auto gens = build_generators(n);

  out.push_back(verify_hermiticity(gens, tolerance));
  out.push_back(verify_tracelessness(gens, tolerance));
  out.push_back(verify_orthonormality(gens, tolerance));
  out.push_back(verify_completeness(gens, tolerance));

  const auto projs = build_projectors(channel, gens);
  const auto gen_form = build_projectors_generator_form(channel, gens);
  const ComplexMatrix& pp = projs.p_plus.matrix();
  const ComplexMatrix& pm = projs.p_minus.matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(n * n, n * n);

  out.push_back(make_report("projector_idempotence",
                            std::max(max_abs_deviation(pp * pp, pp), max_abs_deviation(pm * pm, pm)),
                            tolerance));
  out.push_back(make_report("projector_orthogonality",
                            std::max(max_abs(pp * pm), max_abs(pm * pp)), tolerance));
  out.push_back(make_report("projector_completeness", max_abs_deviation(pp + pm, id), tolerance));

  const bool s = channel.kind == ChannelKind::SChannel;
  const double trace_plus = s ? nd * (nd + 1.0) / 2.0 : 1.0;
  const double trace_minus = s ? nd * (nd - 1.0) / 2.0 : nd * nd - 1.0;
  out.push_back(make_report("projector_traces",
                            std::max(projector_deviation_from_trace(projs.p_plus, trace_plus),
                                     projector_deviation_from_trace(projs.p_minus, trace_minus)),
                            tolerance));
  out.push_back(make_report(
      "projector_generator_form",
      std::max(max_abs_deviation(pp, gen_form.p_plus.matrix()),
               max_abs_deviation(pm, gen_form.p_minus.matrix())),
      tolerance));

  const auto gates = build_gates(channel, gens);
  const ComplexMatrix& si = gates.s_identity.matrix();
  const ComplexMatrix& z = gates.z_gate.matrix();
  out.push_back(make_report("s_identity_is_identity", max_abs_deviation(si, id), tolerance));
  out.push_back(make_report("z_unitarity", max_abs_deviation(z.adjoint() * z, id), tolerance));
  out.push_back(make_report("z_involution", max_abs_deviation(z * z, si), tolerance));
  out.push_back(make_report("z_hermiticity", max_abs_deviation(z, z.adjoint()), tolerance));
  out.push_back(make_report("z2_commutation", max_abs(si * z - z * si), tolerance));

  if (s) {
    out.push_back(make_report("swap_permutation", max_abs_deviation(z, swap_permutation(n)),
                              tolerance));
  } else {
    out.push_back(make_report("u_generator_form",
                              max_abs_deviation(z, u_generator_form(gens).matrix()), tolerance));

    const auto clusters = hermitian_spectrum(z);
    double spectrum_dev = 0.0;
    if (clusters.size() != 2 || clusters[0].multiplicity != n * n - 1 ||
        clusters[1].multiplicity != 1) {
      spectrum_dev = 1.0;
    } else {
      spectrum_dev = std::max({std::abs(clusters[0].value + 1.0) + clusters[0].spread,
                               std::abs(clusters[1].value - 1.0) + clusters[1].spread});
    }
    out.push_back(make_report("u_spectrum", spectrum_dev, tolerance));

    const auto expo = u_exponential_form(gens);
    const double overlap = std::abs((z.adjoint() * expo.u_exp.matrix()).trace()) / (nd * nd);
    out.push_back(make_report("u_exponential_form", std::abs(1.0 - overlap), tolerance));

    const StateVector singlet = singlet_state(n);
    out.push_back(make_report("singlet_eigenvalue", (z * singlet - singlet).cwiseAbs().maxCoeff(),
                              tolerance));
    const auto adj = adjoint_states(gens);
    double adj_dev = 0.0;
    ComplexMatrix basis(n * n, n * n);
    basis.col(0) = singlet;
    for (std::size_t a = 0; a < adj.size(); ++a) {
      adj_dev = std::max(adj_dev, (z * adj[a] + adj[a]).cwiseAbs().maxCoeff());
      basis.col(static_cast<Eigen::Index>(a + 1)) = adj[a];
    }
    out.push_back(make_report("adjoint_eigenvalue", adj_dev, tolerance));
    out.push_back(make_report("eigenbasis_gram", max_abs_deviation(basis.adjoint() * basis, id),
                              tolerance));
  }

  // Both crossing rows need the gates of the two channels.
  const auto s_gates = build_gates({ChannelKind::SChannel, n}, gens);
  const auto t_gates = build_gates({ChannelKind::TChannel, n}, gens);
  const ComplexMatrix crossed_identity = crossing_map(s_gates.s_identity).matrix();
  const ComplexMatrix crossed_swap = crossing_map(s_gates.z_gate).matrix();
  out.push_back(make_report(
      "crossing_row_identity",
      max_abs_deviation(crossed_identity,
                        0.5 * nd * (t_gates.s_identity.matrix() + t_gates.z_gate.matrix())),
      tolerance));
  out.push_back(make_report("crossing_row_swap",
                            max_abs_deviation(crossed_swap, t_gates.s_identity.matrix()),
                            tolerance));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double scalar_dev = 0.0;
  double residual = 0.0;
  double cross_dev = 0.0;
  double block_dev = 0.0;
  double w_unitarity = 0.0;
  for (int sample = 0; sample < random_samples; ++sample) {
    const AmplitudeCoefficients c{channel, Complex(normal(rng), normal(rng)),
                                  Complex(normal(rng), normal(rng))};
    const auto m = amplitude_operator(c, gates);
    const auto [m_plus, m_minus] = scalar_amplitudes(m, projs);
    scalar_dev = std::max({scalar_dev, std::abs(m_plus - (c.a + c.b)), std::abs(m_minus - (c.a - c.b))});
    residual = std::max(residual, invariance_residual(m, projs));

    const auto crossed = cross_coefficients(c);
    const auto& target_gates = crossed.channel.kind == ChannelKind::SChannel ? s_gates : t_gates;
    const auto mapped = s ? crossing_map(m) : inverse_crossing_map(m);
    cross_dev = std::max(cross_dev, max_abs_deviation(mapped.matrix(),
                                                      amplitude_operator(crossed, target_gates).matrix()));

    const auto plan = plan_encoding(c);
    const ComplexMatrix w = build_w(plan, gates);
    block_dev = std::max(block_dev, verify_block(w, m, plan.alpha, tolerance).max_deviation);
    w_unitarity = std::max(w_unitarity,
                           max_abs_deviation(w.adjoint() * w, ComplexMatrix::Identity(w.rows(), w.cols())));
  }
  if (random_samples > 0) {
    out.push_back(make_report("amplitude_scalar_projection", scalar_dev, tolerance));
    out.push_back(make_report("amplitude_invariance", residual, tolerance));
    out.push_back(make_report("crossing_coefficients", cross_dev, tolerance));
    out.push_back(make_report("block_encoding", block_dev, tolerance));
    out.push_back(make_report("w_unitarity", w_unitarity, tolerance));
  }
  return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace sun_gates
