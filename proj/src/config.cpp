#include "sunspin/config.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace sunspin {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

HamiltonianSpec parse_hamiltonian(
    GroupId group, int sites,
    const std::vector<std::pair<cplx, std::vector<std::pair<int, std::vector<std::string>>>>>&
        terms) {
  HamiltonianSpec h;
  h.group = group;
  h.sites = sites;
  for (const auto& [coeff, factors] : terms) h.terms.push_back({coeff, factors});
  validate_hamiltonian(h);
  return h;
}

RunConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: bad JSON: ") + e.what());
  }
  try {
    RunConfig cfg;
    cfg.group = group_from_string(j.at("group").get<std::string>());
    cfg.sites = j.value("sites", 1);
    cfg.hbar = j.value("hbar", 1.0);
    cfg.dt = j.value("dt", 1e-3);
    cfg.steps = j.value("steps", 1000);
    cfg.method = method_from_string(j.value("method", std::string("berry")));
    cfg.output = j.value("output", std::string("out.csv"));
    cfg.seed = j.value("seed", uint64_t{0});
    if (cfg.sites < 1) throw std::invalid_argument("config: sites must be >= 1");
    if (cfg.dt <= 0.0) throw std::invalid_argument("config: dt must be positive");
    if (cfg.steps < 1) throw std::invalid_argument("config: steps must be >= 1");

    std::vector<std::pair<cplx, std::vector<std::pair<int, std::vector<std::string>>>>> terms;
    for (const json& t : j.at("hamiltonian")) {
      const json& c = t.at("coeff");
      cplx coeff;
      if (c.is_array())
        coeff = cplx(c.at(0).get<double>(), c.at(1).get<double>());
      else
        coeff = cplx(c.get<double>(), 0.0);
      std::vector<std::pair<int, std::vector<std::string>>> factors;
      for (const json& f : t.at("ops")) {
        const int site = f.at(0).get<int>();
        std::vector<std::string> names;
        for (const json& n : f.at(1)) names.push_back(n.get<std::string>());
        factors.emplace_back(site, std::move(names));
      }
      terms.emplace_back(coeff, std::move(factors));
    }
    cfg.hamiltonian = parse_hamiltonian(cfg.group, cfg.sites, terms);

    if (j.contains("initial")) {
      for (const json& site : j.at("initial")) {
        CoherentParams p;
        p.group = cfg.group;
        for (const json& v : site) p.values.push_back(v.get<double>());
        validate_params(p);
        cfg.initial.push_back(std::move(p));
      }
      if (static_cast<int>(cfg.initial.size()) != cfg.sites)
        throw std::invalid_argument("config: initial must list one parameter set per site");
    }
    return cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_json(ss.str());
}

std::string trajectory_to_csv(const Trajectory& tr) {
  std::string csv = "t";
  const std::vector<std::string>& names = param_names(tr.group);
  for (int s = 0; s < tr.sites; ++s)
    for (const std::string& n : names) csv += "," + n + "_" + std::to_string(s);
  for (int s = 0; s < tr.sites; ++s)
    for (const char* n : {"Sx", "Sy", "Sz"}) csv += "," + std::string(n) + "_" + std::to_string(s);
  csv += ",energy\n";
  for (size_t k = 0; k < tr.times.size(); ++k) {
    csv += fmt17(tr.times[k]);
    for (double v : tr.points[k]) csv += "," + fmt17(v);
    for (double v : tr.observables[k]) csv += "," + fmt17(v);
    csv += "," + fmt17(tr.energies[k]) + "\n";
  }
  return csv;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (first) {
      table.header = cells;
      first = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& c : cells) row.push_back(std::strtod(c.c_str(), nullptr));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace sunspin
