#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "sunspin/config.hpp"

using namespace sunspin;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "sunspin_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path p = temp_dir() / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* kLarmorConfig = R"({
  "group": "su2",
  "hamiltonian": [ {"coeff": [1.0, 0.0], "ops": [[0, ["Sz"]]]} ],
  "initial": [[1.0471975511965976, 0.25]],
  "dt": 1e-3,
  "steps": 500,
  "method": "berry",
  "output": "%OUT%"
})";

std::string larmor_config(const std::string& out_csv) {
  std::string cfg = kLarmorConfig;
  cfg.replace(cfg.find("%OUT%"), 5, out_csv);
  return cfg;
}

}  // namespace

TEST_CASE("hamiltonian grammar") {
  HamiltonianSpec h = parse_hamiltonian(GroupId::SU2, 1, {{-1.0, {{0, {"Sz"}}}}});
  const CMatrix m = assemble_matrix(h);
  CHECK(m(0, 0) == cplx(-0.5, 0.0));
  CHECK(m(1, 1) == cplx(0.5, 0.0));

  CHECK_NOTHROW(parse_hamiltonian(GroupId::SU3, 1, {{1.0, {{0, {"Sz", "Sz"}}}}}));
  CHECK_THROWS_AS(parse_hamiltonian(GroupId::SU2, 1, {{cplx(0.5, 0.1), {{0, {"Sp"}}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_hamiltonian(GroupId::SU2, 1, {{1.0, {{0, {"Nope"}}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_hamiltonian(GroupId::SU2, 1, {{1.0, {{3, {"Sz"}}}}}),
                  std::invalid_argument);
}

TEST_CASE("config parsing and validation") {
  const RunConfig cfg = parse_config_json(larmor_config("x.csv"));
  CHECK(cfg.group == GroupId::SU2);
  CHECK(cfg.sites == 1);
  CHECK(cfg.steps == 500);
  CHECK(cfg.initial.size() == 1);
  CHECK(cfg.method == EomMethod::kBerry);

  CHECK_THROWS_AS(parse_config_json("{not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_json(R"({"group":"su9","hamiltonian":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config_json(
                      R"({"group":"su2","hamiltonian":[{"coeff":[0.5,0.1],"ops":[[0,["Sp"]]]}]})"),
                  std::invalid_argument);
}

TEST_CASE("trajectory CSV round-trips through the reader") {
  HamiltonianSpec h{GroupId::SU2, 1, {{1.0, {{0, {"Sz"}}}}}};
  const Trajectory tr = integrate(h, {{GroupId::SU2, {1.0, 0.0}}}, 1e-2, 10, EomMethod::kBerry);
  const std::string csv = trajectory_to_csv(tr);
  const CsvTable t = parse_csv(csv);
  REQUIRE(t.header.size() == 1 + 2 + 3 + 1);
  CHECK(t.header[0] == "t");
  CHECK(t.header[1] == "theta_0");
  CHECK(t.header.back() == "energy");
  REQUIRE(t.rows.size() == 11);
  CHECK(t.rows[0][0] == 0.0);
  CHECK(t.rows[10][0] == doctest::Approx(0.1));
  // Exact round trip of a representative value.
  CHECK(t.rows[5][1] == tr.points[5][0]);
}

TEST_CASE("simulate writes a deterministic CSV with the precession solution") {
  const std::string out = (temp_dir() / "larmor.csv").string();
  const std::string cfg = write_temp("larmor.json", larmor_config(out));
  REQUIRE(run_cli({"simulate", "--config", cfg}) == 0);
  const std::string first = slurp(out);
  REQUIRE(run_cli({"simulate", "--config", cfg}) == 0);
  CHECK(first == slurp(out));  // byte-identical rerun

  const CsvTable t = parse_csv(first);
  const double phi_end = t.rows.back()[2];
  CHECK(phi_end == doctest::Approx(0.25 + 0.5).epsilon(1e-8));  // phi0 + T
}

TEST_CASE("exit codes") {
  const std::string bad = write_temp("bad.json", "{");
  CHECK(run_cli({"simulate", "--config", bad}) == 1);

  // Singular initial point: theta = 0 pole.
  std::string cfg = larmor_config((temp_dir() / "p.csv").string());
  cfg.replace(cfg.find("1.0471975511965976"), 18, "0.0000000000000000");
  const std::string singular = write_temp("singular.json", cfg);
  CHECK(run_cli({"simulate", "--config", singular}) == 2);

  CHECK(run_cli({"simulate"}) == 1);             // missing --config
  CHECK(run_cli({"report", "su9"}) == 1);        // unknown group
}

TEST_CASE("expect and derive run on a config") {
  const std::string out = (temp_dir() / "expect.csv").string();
  const std::string cfg = write_temp("expect.json", larmor_config(out));
  REQUIRE(run_cli({"expect", "--config", cfg}) == 0);
  const CsvTable t = parse_csv(slurp(out));
  REQUIRE(t.rows.size() == 1);
  // <Sz> = cos(theta)/2 at theta = pi/3 -> 0.25.
  CHECK(t.rows[0][5] == doctest::Approx(0.25).epsilon(1e-10));
  REQUIRE(run_cli({"derive", "--config", cfg}) == 0);
}

TEST_CASE("report subcommand writes the pinned CSV header") {
  const std::string out = (temp_dir() / "report.csv").string();
  REQUIRE(run_cli({"report", "su4", "--samples", "10", "--seed", "3", "--output", out}) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("formula,point,paper_value,oracle_value,abs_dev\n", 0) == 0);
  CHECK(csv.find("su4.avg.Sz") != std::string::npos);
  // Same seed, same bytes.
  const std::string out2 = (temp_dir() / "report2.csv").string();
  REQUIRE(run_cli({"report", "su4", "--samples", "10", "--seed", "3", "--output", out2}) == 0);
  CHECK(csv == slurp(out2));
}

TEST_CASE("compare subcommand") {
  std::string cfg_text = larmor_config((temp_dir() / "cmp.csv").string());
  cfg_text.replace(cfg_text.find("\"steps\": 500"), 12, "\"steps\": 50");
  const std::string cfg = write_temp("cmp.json", cfg_text);
  REQUIRE(run_cli({"compare", "--config", cfg}) == 0);
  const CsvTable t = parse_csv(slurp((temp_dir() / "cmp.csv").string()));
  REQUIRE(t.rows.size() == 51);
  CHECK(t.header.size() == 1 + 9);
  // Larmor: classical equals quantum throughout.
  for (const std::vector<double>& row : t.rows)
    for (size_t j = 3; j < row.size(); j += 3) CHECK(std::abs(row[j]) < 1e-6);
}

TEST_CASE("method override flag") {
  const std::string out = (temp_dir() / "paper.csv").string();
  const std::string cfg = write_temp("paper.json", larmor_config(out));
  REQUIRE(run_cli({"simulate", "--config", cfg, "--method", "paper"}) == 0);
  const CsvTable t = parse_csv(slurp(out));
  // The published SU(2) field precesses backwards at half rate.
  CHECK(t.rows.back()[2] == doctest::Approx(0.25 - 0.25).epsilon(1e-6));
}
