#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sun_gates/amplitude_model.hpp"

using namespace sun_gates;
using std::numbers::pi;

namespace {

struct Channel {
  GeneratorSet gens;
  ProjectorSet projs;
  GateSet gates;

  Channel(ChannelKind kind, int n)
      : gens(build_generators(n)),
        projs(build_projectors({kind, n}, gens)),
        gates(build_gates({kind, n}, gens)) {}
};

}  // namespace

TEST_CASE("amplitude_operator examples") {
  const Channel s2(ChannelKind::SChannel, 2);
  CHECK(approx_equal(amplitude_operator({s2.gates.channel, 1.0, 0.0}, s2.gates).matrix(),
                     ComplexMatrix::Identity(4, 4), 0.0));
  CHECK(approx_equal(amplitude_operator({s2.gates.channel, 0.0, 1.0}, s2.gates).matrix(),
                     oracles::swap_gate(2), 0.0));

  const Channel t3(ChannelKind::TChannel, 3);
  const Complex i(0.0, 1.0);
  const ComplexMatrix expected = i * ComplexMatrix::Identity(9, 9) + 2.0 * t3.gates.z_gate.matrix();
  CHECK(approx_equal(amplitude_operator({t3.gates.channel, i, 2.0}, t3.gates).matrix(), expected, 1e-15));

  CHECK_THROWS_AS(amplitude_operator({t3.gates.channel, 1.0, 0.0}, s2.gates), std::invalid_argument);
}

TEST_CASE("scalar_amplitudes examples") {
  for (const auto kind : {ChannelKind::SChannel, ChannelKind::TChannel}) {
    const Channel c(kind, 3);
    auto [ip, im] = scalar_amplitudes(c.gates.s_identity, c.projs);
    CHECK(std::abs(ip - 1.0) < 1e-14);
    CHECK(std::abs(im - 1.0) < 1e-14);
    auto [zp, zm] = scalar_amplitudes(c.gates.z_gate, c.projs);
    CHECK(std::abs(zp - 1.0) < 1e-14);
    CHECK(std::abs(zm + 1.0) < 1e-14);
    auto [pp, pm] = scalar_amplitudes(3.0 * c.projs.p_plus, c.projs);
    CHECK(std::abs(pp - 3.0) < 1e-14);
    CHECK(std::abs(pm) < 1e-14);
  }
}

TEST_CASE("invariance_residual separates invariant from non-invariant operators") {
  const Channel s2(ChannelKind::SChannel, 2);
  CHECK(invariance_residual(2.0 * s2.projs.p_plus - 5.0 * s2.projs.p_minus, s2.projs) < 1e-15);
  const TwoQuditOperator t1(2, tensor(s2.gens[0], ComplexMatrix::Identity(2, 2)));
  CHECK(invariance_residual(t1, s2.projs) > 0.1);
  const Channel t2(ChannelKind::TChannel, 2);
  CHECK(invariance_residual(t1, t2.projs) > 0.1);
}

TEST_CASE("amplitude algebra over random coefficients") {
  std::mt19937_64 rng(1234);
  for (int n = 2; n <= 6; ++n) {
    for (const auto kind : {ChannelKind::SChannel, ChannelKind::TChannel}) {
      CAPTURE(n);
      const Channel c(kind, n);
      double proj_dev = 0.0;
      double residual = 0.0;
      for (int s = 0; s < 100; ++s) {
        const Complex a = oracles::random_complex(rng);
        const Complex b = oracles::random_complex(rng);
        const auto m = amplitude_operator({c.gates.channel, a, b}, c.gates);
        const auto [mp, mm] = scalar_amplitudes(m, c.projs);
        proj_dev = std::max({proj_dev, std::abs(mp - (a + b)), std::abs(mm - (a - b))});
        residual = std::max(residual, invariance_residual(m, c.projs));
      }
      CHECK(proj_dev <= 1e-12);
      CHECK(residual <= 1e-12);
    }
  }
}

TEST_CASE("cross_coefficients examples") {
  const ChannelSpec s2{ChannelKind::SChannel, 2};
  auto c = cross_coefficients({s2, 1.0, 0.0});
  CHECK(c.channel.kind == ChannelKind::TChannel);
  CHECK(std::abs(c.a - 1.0) < 1e-15);
  CHECK(std::abs(c.b - 1.0) < 1e-15);
  c = cross_coefficients({s2, 0.0, 1.0});
  CHECK(std::abs(c.a - 1.0) < 1e-15);
  CHECK(std::abs(c.b) < 1e-15);

  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    const AmplitudeCoefficients in{{ChannelKind::SChannel, n}, oracles::random_complex(rng),
                                   oracles::random_complex(rng)};
    const auto back = cross_coefficients(cross_coefficients(in));
    CHECK(back.channel == in.channel);
    CHECK(std::abs(back.a - in.a) <= 1e-14);
    CHECK(std::abs(back.b - in.b) <= 1e-14);
  }
}

TEST_CASE("coefficient crossing agrees with the operator reshuffle") {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const Channel s(ChannelKind::SChannel, n);
    const Channel t(ChannelKind::TChannel, n);
    for (int k = 0; k < 20; ++k) {
      const AmplitudeCoefficients cs{s.gates.channel, oracles::random_complex(rng),
                                     oracles::random_complex(rng)};
      const auto ms = amplitude_operator(cs, s.gates);
      const auto mt = amplitude_operator(cross_coefficients(cs), t.gates);
      CHECK(max_abs_deviation(crossing_map(ms).matrix(), mt.matrix()) <= 1e-12);

      const AmplitudeCoefficients ct{t.gates.channel, oracles::random_complex(rng),
                                     oracles::random_complex(rng)};
      const auto back = amplitude_operator(cross_coefficients(ct), s.gates);
      CHECK(max_abs_deviation(inverse_crossing_map(amplitude_operator(ct, t.gates)).matrix(),
                              back.matrix()) <= 1e-12);
    }
  }
}

TEST_CASE("unitary parameterization") {
  const Channel t3(ChannelKind::TChannel, 3);
  auto c = unitary_parameterization(0.0, 0.0, t3.gates);
  CHECK(std::abs(c.a - 1.0) < 1e-16);
  CHECK(std::abs(c.b) < 1e-16);
  c = unitary_parameterization(pi / 2.0, 0.0, t3.gates);
  CHECK(std::abs(c.a) < 1e-15);
  CHECK(std::abs(c.b - Complex(0.0, 1.0)) < 1e-15);

  const double theta = pi / 3.0;
  const double phi = pi / 7.0;
  c = unitary_parameterization(theta, phi, t3.gates);
  const ComplexMatrix m = amplitude_operator(c, t3.gates).matrix();
  const ComplexMatrix expected =
      std::polar(1.0, phi) * oracles::expm_taylor(Complex(0.0, theta) * t3.gates.z_gate.matrix());
  CHECK(max_abs_deviation(m, expected) <= 1e-10);

  // eigenvalues e^{i phi} e^{+- i theta} on the two irreps
  const auto [mp, mm] = scalar_amplitudes(TwoQuditOperator(3, m), t3.projs);
  CHECK(std::abs(mp - std::polar(1.0, phi + theta)) < 1e-12);
  CHECK(std::abs(mm - std::polar(1.0, phi - theta)) < 1e-12);
}

TEST_CASE("unitary parameterization on a 64-point grid") {
  for (const auto kind : {ChannelKind::SChannel, ChannelKind::TChannel}) {
    const Channel ch(kind, 3);
    const ComplexMatrix id = ComplexMatrix::Identity(9, 9);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const double theta = 2.0 * pi * i / 8.0;
        const double phi = 2.0 * pi * j / 8.0 - pi;
        const auto c = unitary_parameterization(theta, phi, ch.gates);
        CHECK(std::abs(std::norm(c.a) + std::norm(c.b) - 1.0) <= 1e-14);
        CHECK(std::abs((std::conj(c.a) * c.b).real()) <= 1e-14);
        const ComplexMatrix m = amplitude_operator(c, ch.gates).matrix();
        CHECK(max_abs_deviation(m.adjoint() * m, id) <= 1e-10);

        const auto report = check_partial_wave({0, c.a, c.b, 1.0});
        CHECK(report.elastic_saturation);
        CHECK(report.bound_satisfied);
      }
    }
  }
}

TEST_CASE("check_partial_wave examples") {
  auto r = check_partial_wave({0, 0.0, 0.0, 1.0});
  CHECK(r.norm_sq == 0.0);
  CHECK(r.eigen_plus == Complex(1.0, 0.0));
  CHECK(r.eigen_minus == Complex(1.0, 0.0));
  CHECK(r.in_unit_disk_plus);
  CHECK(r.in_unit_disk_minus);
  CHECK(r.bound_satisfied);
  CHECK_FALSE(r.elastic_saturation);

  r = check_partial_wave({0, 1.0, 0.0, 0.5});
  CHECK(r.elastic_saturation);
  CHECK(r.bound_satisfied);
  CHECK(std::abs(r.eigen_plus - Complex(1.0, 0.5)) <= 1e-14);

  r = check_partial_wave({1, 1.0, 1.0, 1.0});
  CHECK(std::abs(r.norm_sq - 2.0) <= 1e-14);
  CHECK_FALSE(r.bound_satisfied);
  CHECK_FALSE(r.elastic_saturation);
  CHECK(std::abs(r.eigen_plus - Complex(1.0, 2.0)) <= 1e-14);
  CHECK(std::abs(r.eigen_minus - Complex(1.0, 0.0)) <= 1e-14);

  CHECK_THROWS_AS(check_partial_wave({0, 1.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(check_partial_wave({-1, 1.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("disk samples") {
  const auto rows = disk_samples(4);
  bool has_zero = false;
  bool has_quarter = false;
  int boundary = 0;
  for (const auto& r : rows) {
    if (!r.boundary) {
      CHECK(r.norm_sq < 1.0);
      continue;
    }
    ++boundary;
    CHECK(std::abs(r.norm_sq - 1.0) <= 1e-12);
    if (r.theta == 0.0 && std::abs(r.a - 1.0) < 1e-15 && std::abs(r.b) < 1e-15) has_zero = true;
    if (r.theta == pi / 2.0 && std::abs(r.a) < 1e-15 && std::abs(r.b - Complex(0, 1)) < 1e-15)
      has_quarter = true;
  }
  CHECK(boundary == 4);
  CHECK(has_zero);
  CHECK(has_quarter);
  CHECK(rows.size() == 4 + 1 + 3 * 4);

  CHECK_THROWS_AS(disk_samples(1), std::invalid_argument);
}
