#include "sun_gates/amplitude_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sun_gates {

namespace {

void require_dims(const TwoQuditOperator& m, const ProjectorSet& projs) {
  if (m.n() != projs.channel.n) {
    throw std::invalid_argument("operator dimension does not match projector set");
  }
}

}  // namespace

TwoQuditOperator amplitude_operator(const AmplitudeCoefficients& c, const GateSet& gates) {
  if (!(c.channel == gates.channel)) {
    throw std::invalid_argument("amplitude_operator: coefficient channel does not match gate set");
  }
  return c.a * gates.s_identity + c.b * gates.z_gate;
}

std::pair<Complex, Complex> scalar_amplitudes(const TwoQuditOperator& m, const ProjectorSet& projs) {
  require_dims(m, projs);
  auto project = [&](const TwoQuditOperator& p) {
    return (m.matrix() * p.matrix()).trace() / p.matrix().trace();
  };
  return {project(projs.p_plus), project(projs.p_minus)};
}

double invariance_residual(const TwoQuditOperator& m, const ProjectorSet& projs) {
  const auto [m_plus, m_minus] = scalar_amplitudes(m, projs);
  const ComplexMatrix invariant = m_plus * projs.p_plus.matrix() + m_minus * projs.p_minus.matrix();
  return max_abs_deviation(m.matrix(), invariant);
}

AmplitudeCoefficients cross_coefficients(const AmplitudeCoefficients& c) {
  const double half_n = 0.5 * c.channel.n;
  AmplitudeCoefficients out = c;
  out.channel.kind = other_channel(c.channel.kind);
  if (c.channel.kind == ChannelKind::SChannel) {
    // a S_I + b S_W -> a (N/2)(S_I + U) + b S_I
    out.a = half_n * c.a + c.b;
    out.b = half_n * c.a;
  } else {
    out.a = c.b / half_n;
    out.b = c.a - c.b;
  }
  return out;
}

AmplitudeCoefficients unitary_parameterization(double theta, double phi, const GateSet& gates) {
  const Complex phase = std::polar(1.0, phi);
  return AmplitudeCoefficients{gates.channel, phase * std::cos(theta),
                               Complex(0.0, 1.0) * phase * std::sin(theta)};
}

UnitarityReport check_partial_wave(const PartialWaveSector& sector, double tolerance) {
  if (!(sector.kappa_j > 0.0)) {
    throw std::invalid_argument("check_partial_wave: kappa_J must be positive");
  }
  if (sector.j < 0) throw std::invalid_argument("check_partial_wave: J must be non-negative");

  UnitarityReport r;
  r.norm_sq = std::norm(sector.a_j) + std::norm(sector.b_j);
  r.bound_satisfied = r.norm_sq <= 1.0 + tolerance;
  r.elastic_saturation = std::abs(r.norm_sq - 1.0) <= tolerance;
  const Complex i_kappa(0.0, sector.kappa_j);
  r.eigen_plus = 1.0 + i_kappa * (sector.a_j + sector.b_j);
  r.eigen_minus = 1.0 + i_kappa * (sector.a_j - sector.b_j);
  r.in_unit_disk_plus = std::abs(r.eigen_plus) <= 1.0 + tolerance;
  r.in_unit_disk_minus = std::abs(r.eigen_minus) <= 1.0 + tolerance;
  return r;
}

std::vector<DiskSample> disk_samples(int resolution) {
  if (resolution < 2) throw std::invalid_argument("disk_samples: resolution must be >= 2");
  const Complex i_unit(0.0, 1.0);
  std::vector<DiskSample> rows;
  auto emit = [&](double theta, double radius, bool boundary) {
    DiskSample s;
    s.theta = theta;
    s.phi = 0.0;
    s.a = radius * std::cos(theta);
    s.b = i_unit * (radius * std::sin(theta));
    s.norm_sq = std::norm(s.a) + std::norm(s.b);
    s.boundary = boundary;
    rows.push_back(s);
  };

  // Exact values at the quarter turns keep the labelled points clean.
  auto angle = [resolution](int k) {
    if (4 * k % resolution == 0) return (std::numbers::pi / 2.0) * (4 * k / resolution);
    return 2.0 * std::numbers::pi * k / resolution;
  };
  for (int k = 0; k < resolution; ++k) emit(angle(k), 1.0, true);

  emit(0.0, 0.0, false);
  for (int i = 1; i < resolution; ++i) {
    const double radius = static_cast<double>(i) / resolution;
    for (int k = 0; k < resolution; ++k) emit(angle(k), radius, false);
  }
  return rows;
}

}  // namespace sun_gates
