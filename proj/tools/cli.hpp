#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sun_gates/invariant_channels.hpp"
#include "sun_gates/matrix.hpp"

namespace sun_gates::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

struct RunConfig {
  int n = 3;
  ChannelKind channel = ChannelKind::SChannel;
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  std::string output;  // empty: write to the command's output stream
  std::string format = "json";
};

/// Throws std::invalid_argument unless n >= 2 and tolerance > 0.
void validate(const RunConfig& config);

/// "re,im" (or a bare real "re").
Complex parse_complex(const std::string& text);

int cmd_generators(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, int n_max, bool both_channels, std::ostream& out);
int cmd_encode(const RunConfig& config, Complex a, Complex b,
               const std::optional<std::vector<double>>& psi, std::ostream& out);
int cmd_cross(const RunConfig& config, Complex a, Complex b, std::ostream& out);
int cmd_disk(const RunConfig& config, int resolution, std::ostream& out);
int cmd_partial_wave(const RunConfig& config, const std::string& sectors_file, std::ostream& out);

/// Full command line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sun_gates::cli
