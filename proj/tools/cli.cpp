#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "sun_gates/amplitude_model.hpp"
#include "sun_gates/identity_suite.hpp"
#include "sun_gates/lcu_encoder.hpp"
#include "sun_gates/sun_algebra.hpp"

namespace sun_gates::cli {

using nlohmann::json;

namespace {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const VerificationReport& r) {
  return {{"identity", r.name}, {"max_deviation", r.max_deviation}, {"passed", r.passed}};
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.n < 2) {
    throw std::invalid_argument("--n must be >= 2, got " + std::to_string(config.n));
  }
  if (!(config.tolerance > 0.0)) throw std::invalid_argument("--tolerance must be positive");
  if (config.format != "json" && config.format != "csv") {
    throw std::invalid_argument("--format must be json or csv");
  }
}

Complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw std::invalid_argument("complex values use the form re,im: '" + text + "'");
}

int cmd_generators(const RunConfig& config, std::ostream& out) {
  validate(config);
  const auto gens = build_generators(config.n);
  const auto herm = verify_hermiticity(gens, config.tolerance);
  const auto traceless = verify_tracelessness(gens, config.tolerance);
  const auto ortho = verify_orthonormality(gens, config.tolerance);
  const auto complete = verify_completeness(gens, config.tolerance);
  const bool ok = herm.passed && traceless.passed && ortho.passed && complete.passed;

  json mats = json::array();
  for (const auto& t : gens.generators()) mats.push_back(to_json(t));
  json doc = {{"n", config.n},
              {"count", gens.size()},
              {"generators", std::move(mats)},
              {"verification",
               {{"hermiticity_max_deviation", herm.max_deviation},
                {"tracelessness_max_deviation", traceless.max_deviation},
                {"orthonormality_max_deviation", ortho.max_deviation},
                {"completeness_max_deviation", complete.max_deviation},
                {"tolerance", config.tolerance},
                {"passed", ok}}}};
  out << doc.dump(2) << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_verify(const RunConfig& config, int n_max, bool both_channels, std::ostream& out) {
  validate(config);
  const int last = std::max(config.n, n_max);
  std::vector<ChannelKind> kinds{config.channel};
  if (both_channels) kinds = {ChannelKind::SChannel, ChannelKind::TChannel};

  json runs = json::array();
  bool ok = true;
  for (int n = config.n; n <= last; ++n) {
    for (const auto kind : kinds) {
      const auto reports = run_identity_suite({kind, n}, config.tolerance, config.seed);
      json checks = json::array();
      for (const auto& r : reports) checks.push_back(to_json(r));
      const bool run_ok = all_passed(reports);
      ok = ok && run_ok;
      runs.push_back({{"n", n},
                      {"channel", std::string(channel_name(kind))},
                      {"checks", std::move(checks)},
                      {"all_passed", run_ok}});
    }
  }
  json doc = {{"tolerance", config.tolerance},
              {"seed", config.seed},
              {"runs", std::move(runs)},
              {"all_passed", ok}};
  out << doc.dump(2) << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_encode(const RunConfig& config, Complex a, Complex b,
               const std::optional<std::vector<double>>& psi, std::ostream& out) {
  validate(config);
  const ChannelSpec channel{config.channel, config.n};
  const auto gens = build_generators(config.n);
  const auto gates = build_gates(channel, gens);
  const AmplitudeCoefficients coeffs{channel, a, b};
  const auto plan = plan_encoding(coeffs);
  const ComplexMatrix w = build_w(plan, gates);
  const auto block = verify_block(w, amplitude_operator(coeffs, gates), plan.alpha, config.tolerance);

  json doc = {{"circuit", circuit_to_json(export_circuit(plan))},
              {"alpha", plan.alpha},
              {"gamma", plan.gamma},
              {"phi_a", plan.phi_a},
              {"phi_b", plan.phi_b},
              {"block_deviation", block.max_deviation},
              {"block_passed", block.passed}};
  if (psi) {
    const int dim = config.n * config.n;
    if (static_cast<int>(psi->size()) != dim) {
      throw std::invalid_argument("--psi needs " + std::to_string(dim) + " amplitudes, got " +
                                  std::to_string(psi->size()));
    }
    StateVector state(dim);
    for (int i = 0; i < dim; ++i) state(i) = (*psi)[static_cast<std::size_t>(i)];
    const auto result = apply_with_postselection(plan, gates, state);
    json amps = json::array();
    for (Eigen::Index i = 0; i < result.state.size(); ++i) amps.push_back(to_json(result.state(i)));
    doc["postselection"] = {{"success_probability", result.success_probability},
                            {"annihilated", result.annihilated},
                            {"state", std::move(amps)}};
  }
  out << doc.dump(2) << '\n';
  return block.passed ? kSuccess : kVerificationFailure;
}

int cmd_cross(const RunConfig& config, Complex a, Complex b, std::ostream& out) {
  validate(config);
  const int n = config.n;
  const auto gens = build_generators(n);
  const ChannelSpec source{config.channel, n};
  const ChannelSpec target{other_channel(config.channel), n};
  const AmplitudeCoefficients input{source, a, b};
  const auto crossed = cross_coefficients(input);
  const auto back = cross_coefficients(crossed);

  const auto source_op = amplitude_operator(input, build_gates(source, gens));
  const auto target_op = amplitude_operator(crossed, build_gates(target, gens));
  const auto mapped = config.channel == ChannelKind::SChannel ? crossing_map(source_op)
                                                              : inverse_crossing_map(source_op);
  const double op_dev = max_abs_deviation(mapped.matrix(), target_op.matrix());
  const double round_trip = std::max(std::abs(back.a - a), std::abs(back.b - b));
  const bool ok = op_dev <= config.tolerance && round_trip <= config.tolerance;

  json doc = {{"n", n},
              {"source_channel", std::string(channel_name(source.kind))},
              {"target_channel", std::string(channel_name(target.kind))},
              {"input", {{"a", to_json(a)}, {"b", to_json(b)}}},
              {"crossed", {{"a", to_json(crossed.a)}, {"b", to_json(crossed.b)}}},
              {"operator_deviation", op_dev},
              {"round_trip_deviation", round_trip},
              {"passed", ok}};
  out << doc.dump(2) << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_disk(const RunConfig& config, int resolution, std::ostream& out) {
  validate(config);
  const auto rows = disk_samples(resolution);
  if (config.format == "json") {
    json doc = json::array();
    for (const auto& r : rows) {
      doc.push_back({{"theta", r.theta},
                     {"phi", r.phi},
                     {"a", to_json(r.a)},
                     {"b", to_json(r.b)},
                     {"norm_sq", r.norm_sq},
                     {"boundary", r.boundary}});
    }
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "theta,phi,re_a,im_a,re_b,im_b,norm_sq\n";
  for (const auto& r : rows) {
    csv << r.theta << ',' << r.phi << ',' << r.a.real() << ',' << r.a.imag() << ',' << r.b.real()
        << ',' << r.b.imag() << ',' << r.norm_sq << '\n';
  }
  out << csv.str();
  return kSuccess;
}

int cmd_partial_wave(const RunConfig& config, const std::string& sectors_file, std::ostream& out) {
  validate(config);
  std::ifstream in(sectors_file);
  if (!in) throw std::invalid_argument("cannot open sectors file '" + sectors_file + "'");

  json sectors = json::array();
  bool ok = true;
  std::string line;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (!seen_content) {
      seen_content = true;
      if (text.starts_with("j,")) continue;  // header
    }
    PartialWaveSector sector;
    try {
      const auto fields = split(text, ',');
      if (fields.size() != 6) throw std::invalid_argument("expected 6 fields");
      const double j = parse_double(fields[0]);
      if (j < 0 || j != static_cast<double>(static_cast<int>(j))) {
        throw std::invalid_argument("j must be a non-negative integer");
      }
      sector.j = static_cast<int>(j);
      sector.a_j = {parse_double(fields[1]), parse_double(fields[2])};
      sector.b_j = {parse_double(fields[3]), parse_double(fields[4])};
      sector.kappa_j = parse_double(fields[5]);
      if (!(sector.kappa_j > 0.0)) throw std::invalid_argument("kappa must be positive");
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(sectors_file + ":" + std::to_string(line_no) + ": " + e.what());
    }
    const auto r = check_partial_wave(sector, config.tolerance);
    ok = ok && r.bound_satisfied;
    sectors.push_back({{"line", line_no},
                       {"j", sector.j},
                       {"norm_sq", r.norm_sq},
                       {"bound_satisfied", r.bound_satisfied},
                       {"eigen_plus", to_json(r.eigen_plus)},
                       {"eigen_minus", to_json(r.eigen_minus)},
                       {"in_unit_disk_plus", r.in_unit_disk_plus},
                       {"in_unit_disk_minus", r.in_unit_disk_minus},
                       {"elastic_saturation", r.elastic_saturation}});
  }
  json doc = {{"tolerance", config.tolerance},
              {"sectors", std::move(sectors)},
              {"all_bounds_satisfied", ok}};
  out << doc.dump(2) << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SU(N)-invariant two-qudit scattering gates: construction, verification, encoding"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string channel = "s";
  app.add_option("--n", config.n, "Qudit dimension N")->capture_default_str();
  app.add_option("--channel", channel, "Channel: s (N x N) or t (N x Nbar)")
      ->check(CLI::IsMember({"s", "t"}))
      ->capture_default_str();
  app.add_option("--tolerance", config.tolerance, "Absolute tolerance for identity checks")
      ->envname("SUN_GATES_TOLERANCE")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--output", config.output, "Write output to this path instead of stdout");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* generators = app.add_subcommand("generators", "Emit the SU(N) generators with checks");

  auto* verify = app.add_subcommand("verify", "Run the full operator identity suite");
  int n_max = 0;
  bool both_channels = false;
  verify->add_option("--n-max", n_max, "Sweep N from --n up to this value");
  verify->add_flag("--both-channels", both_channels, "Check the s- and t-channel");

  auto* encode = app.add_subcommand("encode", "Plan and verify the one-ancilla block encoding");
  std::string a_text = "1,0";
  std::string b_text = "0,0";
  std::string psi_text;
  encode->add_option("--a", a_text, "Coefficient of S_I as re,im")->capture_default_str();
  encode->add_option("--b", b_text, "Coefficient of Z as re,im")->capture_default_str();
  encode->add_option("--psi", psi_text, "Real input state amplitudes, comma separated");

  auto* cross = app.add_subcommand("cross", "Cross amplitude coefficients to the other channel");
  cross->add_option("--a", a_text, "Coefficient of S_I as re,im")->capture_default_str();
  cross->add_option("--b", b_text, "Coefficient of Z as re,im")->capture_default_str();

  auto* disk = app.add_subcommand("disk", "Emit amplitude-disk samples");
  int resolution = 8;
  disk->add_option("--resolution", resolution, "Samples per circle")->capture_default_str();

  auto* partial_wave = app.add_subcommand("partial-wave", "Check partial-wave unitarity sectors");
  std::string sectors_file;
  partial_wave->add_option("--sectors", sectors_file, "CSV: j,re_a,im_a,re_b,im_b,kappa")
      ->required();

  std::vector<std::string> argv_storage{"sun-gates"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    config.channel = parse_channel(channel);
    if (disk->parsed() && !app.get_option("--format")->count()) config.format = "csv";
    if (!disk->parsed() && config.format == "csv") {
      throw std::invalid_argument("--format csv is only available for the disk command");
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) throw std::invalid_argument("cannot write to '" + config.output + "'");
      sink = &file;
    }

    if (generators->parsed()) return cmd_generators(config, *sink);
    if (verify->parsed()) return cmd_verify(config, n_max, both_channels, *sink);
    if (encode->parsed()) {
      std::optional<std::vector<double>> psi;
      if (!psi_text.empty()) {
        psi.emplace();
        for (const auto part : split(psi_text, ',')) psi->push_back(parse_double(part));
      }
      return cmd_encode(config, parse_complex(a_text), parse_complex(b_text), psi, *sink);
    }
    if (cross->parsed()) return cmd_cross(config, parse_complex(a_text), parse_complex(b_text), *sink);
    if (disk->parsed()) return cmd_disk(config, resolution, *sink);
    if (partial_wave->parsed()) return cmd_partial_wave(config, sectors_file, *sink);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace sun_gates::cli
