#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;
namespace cli = sun_gates::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const auto path = fs::temp_directory_path() / ("sun_gates_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("generators command") {
  auto r = run({"generators", "--n", "2"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["count"] == 3);
  CHECK(doc["generators"].size() == 3);
  CHECK(doc["verification"]["passed"] == true);

  r = run({"--n", "3", "generators"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["count"] == 8);
  CHECK(doc["verification"]["completeness_max_deviation"].get<double>() < 1e-12);

  r = run({"generators", "--n", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--n") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"verify", "--channel", "u"}).code == 2);
  CHECK(run({"verify", "--tolerance", "0"}).code == 2);
  CHECK(run({"verify", "--format", "csv"}).code == 2);
  CHECK(run({"encode", "--a", "1,2,3"}).code == 2);
  CHECK(run({"encode", "--a", "0", "--b", "0"}).code == 2);
  CHECK(run({"partial-wave"}).code == 2);
  CHECK(run({"partial-wave", "--sectors", "/nonexistent/sectors.csv"}).code == 2);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--n", "4", "--channel", "t"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["all_passed"] == true);
  REQUIRE(doc["runs"].size() == 1);
  CHECK(doc["runs"][0]["channel"] == "t");
  CHECK(doc["runs"][0]["checks"].size() > 10);

  r = run({"verify", "--n", "2", "--n-max", "3", "--both-channels"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["runs"].size() == 4);

  // an impossible tolerance is a verification failure, not a usage error
  r = run({"verify", "--n", "3", "--tolerance", "1e-300"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["all_passed"] == false);
}

TEST_CASE("encode command") {
  auto r = run({"encode", "--n", "2", "--a", "0.5", "--b", "0.5", "--psi", "0,1,0,0"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(std::abs(doc["alpha"].get<double>() - 1.0) < 1e-15);
  CHECK(doc["block_passed"] == true);
  CHECK(std::abs(doc["postselection"]["success_probability"].get<double>() - 0.5) < 1e-12);
  CHECK(doc["circuit"]["gates"].size() == 4);

  r = run({"encode", "--n", "3", "--channel", "t", "--a", "0.6", "--b", "0,0.8"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(std::abs(doc["alpha"].get<double>() - 1.4) < 1e-15);
  CHECK(doc["circuit"]["channel"] == "t");
  CHECK(doc["block_deviation"].get<double>() <= 1e-12);

  CHECK(run({"encode", "--n", "2", "--psi", "1,0"}).code == 2);
  CHECK(run({"encode", "--n", "2", "--psi", "1,1,0,0"}).code == 2);
}

TEST_CASE("cross command") {
  auto r = run({"cross", "--n", "2", "--a", "1", "--b", "0"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["target_channel"] == "t");
  CHECK(std::abs(doc["crossed"]["a"][0].get<double>() - 1.0) < 1e-15);
  CHECK(std::abs(doc["crossed"]["b"][0].get<double>() - 1.0) < 1e-15);
  CHECK(doc["operator_deviation"].get<double>() <= 1e-12);

  r = run({"cross", "--n", "2", "--a", "0", "--b", "1"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(std::abs(doc["crossed"]["a"][0].get<double>() - 1.0) < 1e-15);
  CHECK(std::abs(doc["crossed"]["b"][0].get<double>()) < 1e-15);

  r = run({"cross", "--n", "5", "--channel", "t", "--a", "0.3,-0.2", "--b", "1.5,0.25"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["target_channel"] == "s");
  CHECK(doc["round_trip_deviation"].get<double>() <= 1e-14);
}

TEST_CASE("disk command") {
  auto r = run({"disk", "--resolution", "8"});
  REQUIRE(r.code == 0);
  const auto lines = csv_lines(r.out);
  REQUIRE(!lines.empty());
  CHECK(lines[0] == "theta,phi,re_a,im_a,re_b,im_b,norm_sq");
  int boundary = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto norm_sq = std::stod(lines[i].substr(lines[i].rfind(',') + 1));
    if (std::abs(norm_sq - 1.0) <= 1e-12) ++boundary;
  }
  CHECK(boundary == 8);
  CHECK(lines.size() == 1 + 8 + 1 + 7 * 8);

  r = run({"--format", "json", "disk", "--resolution", "4"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).size() == 4 + 1 + 3 * 4);

  CHECK(run({"disk", "--resolution", "1"}).code == 2);
}

TEST_CASE("partial-wave command") {
  const auto ok = write_temp("ok.csv", "j,re_a,im_a,re_b,im_b,kappa\n0,1,0,0,0,0.5\n\n1,0.5,0,0,0,1\n");
  auto r = run({"partial-wave", "--sectors", ok.string()});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(doc["sectors"].size() == 2);
  CHECK(doc["sectors"][0]["elastic_saturation"] == true);
  CHECK(doc["sectors"][0]["line"] == 2);
  CHECK(doc["sectors"][1]["elastic_saturation"] == false);
  CHECK(doc["all_bounds_satisfied"] == true);

  const auto bad = write_temp("bad.csv", "1,1,0,1,0,1\n");
  r = run({"partial-wave", "--sectors", bad.string()});
  CHECK(r.code == 1);
  doc = json::parse(r.out);
  CHECK(std::abs(doc["sectors"][0]["norm_sq"].get<double>() - 2.0) <= 1e-14);
  CHECK(doc["all_bounds_satisfied"] == false);

  const auto empty = write_temp("empty.csv", "");
  r = run({"partial-wave", "--sectors", empty.string()});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["sectors"].empty());

  const auto broken = write_temp("broken.csv", "j,re_a,im_a,re_b,im_b,kappa\n0,1,0,0,0,1\n0,x,0,0,0,1\n");
  r = run({"partial-wave", "--sectors", broken.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(":3:") != std::string::npos);

  const auto negative_kappa = write_temp("kappa.csv", "0,1,0,0,0,-1\n");
  CHECK(run({"partial-wave", "--sectors", negative_kappa.string()}).code == 2);

  for (const auto& p : {ok, bad, empty, broken, negative_kappa}) fs::remove(p);
}

TEST_CASE("tolerance falls back to the environment") {
  ::setenv("SUN_GATES_TOLERANCE", "1e-300", 1);
  auto r = run({"verify", "--n", "2"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["tolerance"].get<double>() == 1e-300);
  // the flag wins over the environment
  r = run({"verify", "--n", "2", "--tolerance", "1e-10"});
  CHECK(r.code == 0);
  ::unsetenv("SUN_GATES_TOLERANCE");
}

TEST_CASE("output file") {
  const auto path = fs::temp_directory_path() / "sun_gates_test_out.json";
  const auto r = run({"--output", path.string(), "generators", "--n", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = json::parse(in);
  CHECK(doc["count"] == 3);
  fs::remove(path);
}

TEST_CASE("parse_complex") {
  CHECK(cli::parse_complex("1.5") == sun_gates::Complex(1.5, 0.0));
  CHECK(cli::parse_complex("-2,0.25") == sun_gates::Complex(-2.0, 0.25));
  CHECK(cli::parse_complex(" 3 , -1 ") == sun_gates::Complex(3.0, -1.0));
  CHECK_THROWS_AS(cli::parse_complex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_complex(""), std::invalid_argument);
}
