#pragma once

#include <utility>
#include <vector>

#include "sun_gates/invariant_channels.hpp"
#include "sun_gates/matrix.hpp"
#include "sun_gates/qudit_ops.hpp"

namespace sun_gates {

/// M = a S_I + b Z in the given channel.
struct AmplitudeCoefficients {
  ChannelSpec channel;
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
};

/// Fixed-J sector M_J = a_J S_I + b_J Z.
struct PartialWaveSector {
  int j = 0;
  Complex a_j{0.0, 0.0};
  Complex b_j{0.0, 0.0};
  double kappa_j = 1.0;
};

struct UnitarityReport {
  double norm_sq = 0.0;  // |a_J|^2 + |b_J|^2
  bool bound_satisfied = false;
  Complex eigen_plus{0.0, 0.0};   // 1 + i kappa (a + b)
  Complex eigen_minus{0.0, 0.0};  // 1 + i kappa (a - b)
  bool in_unit_disk_plus = false;
  bool in_unit_disk_minus = false;
  bool elastic_saturation = false;
};

/// One row of the amplitude-disk table.
struct DiskSample {
  double theta = 0.0;
  double phi = 0.0;
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
  double norm_sq = 0.0;
  bool boundary = false;
};

TwoQuditOperator amplitude_operator(const AmplitudeCoefficients& c, const GateSet& gates);

/// (M_plus, M_minus) with M_R = Tr(M P_R) / Tr(P_R).
std::pair<Complex, Complex> scalar_amplitudes(const TwoQuditOperator& m, const ProjectorSet& projs);

/// ||M - (M_plus P_plus + M_minus P_minus)||_max; zero iff M is invariant in this channel.
double invariance_residual(const TwoQuditOperator& m, const ProjectorSet& projs);

/// Re-expresses the coefficients in the crossed channel so that
/// crossing_map(M_s(a, b)) = M_t(cross_coefficients(a, b)) (and inversely for t -> s).
AmplitudeCoefficients cross_coefficients(const AmplitudeCoefficients& c);

/// a = e^{i phi} cos(theta), b = i e^{i phi} sin(theta), so M = e^{i phi} exp(i theta Z).
AmplitudeCoefficients unitary_parameterization(double theta, double phi, const GateSet& gates);

/// Throws std::invalid_argument unless kappa_j > 0 and j >= 0.
UnitarityReport check_partial_wave(const PartialWaveSector& sector,
                                   double tolerance = kDefaultTolerance);

/// `resolution` boundary samples at theta_k = 2 pi k / resolution (phi = 0) plus an
/// interior polar grid with radii i / resolution. Throws for resolution < 2.
std::vector<DiskSample> disk_samples(int resolution);

}  // namespace sun_gates
