#pragma once

#include <string>
#include <vector>

#include "sunspin/dynamics.hpp"
#include "sunspin/quantum.hpp"

namespace sunspin {

/// One simulation run as described by a JSON config file.
struct RunConfig {
  GroupId group = GroupId::SU2;
  int sites = 1;
  double hbar = 1.0;
  HamiltonianSpec hamiltonian;
  std::vector<CoherentParams> initial;
  double dt = 1e-3;
  int steps = 1000;
  EomMethod method = EomMethod::kBerry;
  std::string output = "out.csv";
  uint64_t seed = 0;
};

/// Parses and validates; throws std::invalid_argument on any defect
/// (including a non-Hermitian Hamiltonian assembly).
RunConfig load_config(const std::string& path);
RunConfig parse_config_json(const std::string& text);

/// Builds a HamiltonianSpec from parsed term data; same validation.
HamiltonianSpec parse_hamiltonian(
    GroupId group, int sites,
    const std::vector<std::pair<cplx, std::vector<std::pair<int, std::vector<std::string>>>>>&
        terms);

/// Trajectory CSV: t,<params per site>,<Sx,Sy,Sz per site>,energy with 17
/// significant digits.
std::string trajectory_to_csv(const Trajectory& tr);

/// Round-trip reader for the tool's own CSV output.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
CsvTable parse_csv(const std::string& text);

/// Subcommand dispatch for the command-line tool. Returns the process exit
/// code: 0 ok, 1 invalid config, 2 singular initial point, 3 verification
/// failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace sunspin
