#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sunspin/config.hpp"
#include "sunspin/verify.hpp"

namespace sunspin {

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

void print_vector(const char* label, const std::vector<std::string>& names,
                  const std::vector<double>& v) {
  std::printf("%s\n", label);
  for (size_t i = 0; i < v.size(); ++i)
    std::printf("  %-8s %.17g\n", names[i % names.size()].c_str(), v[i]);
}

int cmd_simulate(const RunConfig& cfg) {
  Trajectory tr = integrate(cfg.hamiltonian, cfg.initial, cfg.dt, cfg.steps, cfg.method, cfg.hbar);
  if (tr.aborted)
    std::fprintf(stderr, "warning: trajectory aborted early (%s); partial output written\n",
                 tr.abort_reason.c_str());
  write_file(cfg.output, trajectory_to_csv(tr));
  return 0;
}

int cmd_expect(const RunConfig& cfg) {
  Trajectory tr;
  tr.group = cfg.group;
  tr.sites = cfg.sites;
  tr.hbar = cfg.hbar;
  tr.times.push_back(0.0);
  std::vector<double> flat;
  for (const CoherentParams& p : cfg.initial)
    flat.insert(flat.end(), p.values.begin(), p.values.end());
  tr.points.push_back(flat);
  tr.energies.push_back(classical_energy(cfg.hamiltonian, cfg.initial));
  const GroupOps& ops = group_ops(cfg.group);
  std::vector<double> obs;
  for (const CoherentParams& p : cfg.initial) {
    const CoherentState st = build_oracle(p);
    obs.push_back(expect(st, ops.rep.Sx).real());
    obs.push_back(expect(st, ops.rep.Sy).real());
    obs.push_back(expect(st, ops.rep.Sz).real());
  }
  tr.observables.push_back(obs);
  write_file(cfg.output, trajectory_to_csv(tr));
  return 0;
}

int cmd_derive(const RunConfig& cfg) {
  const std::vector<std::string>& names = param_names(cfg.group);
  for (int s = 0; s < cfg.sites; ++s) {
    const RMatrix w = symplectic_form(cfg.initial[s]);
    std::printf("site %d symplectic form:\n", s);
    for (int r = 0; r < w.n; ++r) {
      for (int c = 0; c < w.n; ++c) std::printf(" % .17g", w.at(r, c));
      std::printf("\n");
    }
  }
  print_vector("berry velocities:", names,
               eom_rhs(cfg.hamiltonian, cfg.initial, EomMethod::kBerry, cfg.hbar));
  print_vector("paper velocities:", names,
               eom_rhs(cfg.hamiltonian, cfg.initial, EomMethod::kPaper, cfg.hbar));
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  const double t_max = cfg.dt * cfg.steps;
  const CompareResult r = compare_quantum(cfg.hamiltonian, cfg.initial, t_max, cfg.dt, cfg.hbar);
  std::string csv = "t";
  for (int s = 0; s < cfg.sites; ++s)
    for (const char* n : {"Sx", "Sy", "Sz"}) {
      csv += ",cl_" + std::string(n) + "_" + std::to_string(s);
      csv += ",qm_" + std::string(n) + "_" + std::to_string(s);
      csv += ",dev_" + std::string(n) + "_" + std::to_string(s);
    }
  csv += "\n";
  char buf[128];
  for (size_t k = 0; k < r.times.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", r.times[k]);
    csv += buf;
    for (size_t j = 0; j < r.classical_obs[k].size(); ++j) {
      std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g", r.classical_obs[k][j],
                    r.quantum_obs[k][j], std::abs(r.classical_obs[k][j] - r.quantum_obs[k][j]));
      csv += buf;
    }
    csv += "\n";
  }
  write_file(cfg.output, csv);
  std::printf("max deviation: %.17g%s\n", r.max_dev,
              r.aborted ? " (aborted at a singular point)" : "");
  return 0;
}

int cmd_verify() {
  bool all = true;
  for (const CheckResult& c : run_invariant_suite()) {
    std::printf("%s %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : ": ", c.detail.c_str());
    all = all && c.pass;
  }
  return all ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"multipolar spin dynamics from group coherent states"};
  app.require_subcommand(1);

  std::string config_path, output_override, method_override;
  uint64_t seed_override = 0;
  bool seed_set = false;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    CLI::Option* c = sub->add_option("--config", config_path, "JSON config file");
    if (needs_config) c->required();
    sub->add_option("--output", output_override, "output path override");
    sub->add_option("--method", method_override, "berry|paper");
    sub->add_option("--seed", seed_override, "seed override")->each([&](const std::string&) {
      seed_set = true;
    });
  };

  CLI::App* simulate = app.add_subcommand("simulate", "integrate a trajectory, write CSV");
  add_common(simulate, true);
  CLI::App* expect_cmd = app.add_subcommand("expect", "observables at the initial point");
  add_common(expect_cmd, true);
  CLI::App* derive = app.add_subcommand("derive", "print the symplectic form and both vector fields");
  add_common(derive, true);
  CLI::App* compare = app.add_subcommand("compare", "classical vs exact quantum metrics CSV");
  add_common(compare, true);
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  std::string report_group;
  int report_samples = 100;
  CLI::App* report = app.add_subcommand("report", "compatibility report CSV for one group");
  report->add_option("group", report_group, "su2|su3|su4|su5")->required();
  report->add_option("--samples", report_samples, "sample count");
  add_common(report, false);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "sunspin");
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      CLI::App* parsed = app.get_subcommands().empty() ? &app : app.get_subcommands()[0];
      std::cout << parsed->help();
      return 0;
    }
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }

  try {
    if (verify->parsed()) return cmd_verify();
    if (report->parsed()) {
      const GroupId g = group_from_string(report_group);
      const CompatibilityReport rep =
          compatibility_report(g, report_samples, seed_set ? seed_override : 0);
      const std::string path =
          output_override.empty() ? "report_" + group_to_string(g) + ".csv" : output_override;
      write_file(path, rep.to_csv());
      return 0;
    }
    RunConfig cfg = load_config(config_path);
    if (!output_override.empty()) cfg.output = output_override;
    if (!method_override.empty()) cfg.method = method_from_string(method_override);
    if (seed_set) cfg.seed = seed_override;
    if (cfg.initial.empty())
      throw std::invalid_argument("config: this subcommand needs initial parameters");
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (expect_cmd->parsed()) return cmd_expect(cfg);
    if (derive->parsed()) return cmd_derive(cfg);
    if (compare->parsed()) return cmd_compare(cfg);
  } catch (const singular_point_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}

}  // namespace sunspin
