#pragma once

#include <cstdint>
#include <vector>

#include "sun_gates/invariant_channels.hpp"
#include "sun_gates/matrix.hpp"

namespace sun_gates {

/// Every operator identity the library relies on for one (N, channel) pair:
/// generator algebra, projector algebra and traces, index-form versus
/// generator-form agreement, gate unitarity/involutivity/hermiticity, the
/// channel-specific checks (swap action, U spectrum, exponential form,
/// singlet/adjoint eigenstates) and both crossing rows. `random_samples`
/// seeded amplitudes (a, b) additionally exercise the amplitude algebra,
/// coefficient crossing and the block encoding.
std::vector<VerificationReport> run_identity_suite(ChannelSpec channel, double tolerance,
                                                   std::uint64_t seed = 0,
                                                   int random_samples = 10);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace sun_gates
