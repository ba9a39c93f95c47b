#include "sunspin/observables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sunspin {

namespace {

cplx ei_phase(double x) { return std::exp(cplx(0.0, x)); }

}  // namespace

void validate_chain(const ChainState& chain) {
  if (chain.sites.empty()) throw std::invalid_argument("chain: needs at least one site");
  for (const CoherentParams& p : chain.sites) {
    if (p.group != chain.sites.front().group)
      throw std::invalid_argument("chain: sites must share one group");
    validate_params(p);
  }
}

cplx expect(const CoherentState& state, const CMatrix& op) {
  if (op.cols() != state.amplitudes.dim())
    throw std::invalid_argument("expect: operator/state dimension mismatch");
  return dot(state.amplitudes, op * state.amplitudes);
}

SpinAverage paper_average(const CoherentParams& p) {
  validate_params(p);
  const std::vector<double>& q = p.values;
  const double theta = q[0], phi = q[1];
  SpinAverage out;
  switch (p.group) {
    case GroupId::SU2: {
      out.s_plus = ei_phase(phi) * std::sin(theta);
      out.s_minus = ei_phase(-phi) * std::sin(theta);
      out.s_z = std::cos(theta);
      break;
    }
    case GroupId::SU3: {
      const double c2g = std::cos(2 * q[3]);
      out.s_plus = ei_phase(phi) * c2g * std::sin(theta);
      out.s_minus = ei_phase(-phi) * c2g * std::sin(theta);
      out.s_z = c2g * std::cos(theta);
      break;
    }
    case GroupId::SU4: {
      const double f = 1.5 * (1.0 - 4.0 * std::cos(q[3]) * std::cos(q[3])) * std::cos(2 * q[5]);
      out.s_plus = ei_phase(phi) * f * std::sin(theta);
      out.s_minus = ei_phase(-phi) * f * std::sin(theta);
      out.s_z = f * std::cos(theta);
      break;
    }
    case GroupId::SU5: {
      const double f = 2.0 * std::cos(std::sqrt(2.0) * q[3]) *
                       (1.0 - 4.0 * std::cos(q[5]) * std::cos(q[5])) * std::cos(2 * q[7]);
      out.s_plus = ei_phase(phi) * f * std::sin(theta);
      out.s_minus = ei_phase(-phi) * f * std::sin(theta);
      // As printed this row carries sin(theta), not cos(theta); kept verbatim.
      out.s_z = f * std::sin(theta);
      break;
    }
  }
  return out;
}

const CMatrix& generator_by_name(GroupId group, const std::string& name) {
  const GroupOps& ops = group_ops(group);
  if (name == "Sx") return ops.rep.Sx;
  if (name == "Sy") return ops.rep.Sy;
  if (name == "Sz") return ops.rep.Sz;
  if (name == "Sp") return ops.rep.Sp;
  if (name == "Sm") return ops.rep.Sm;
  if (name == "Qxy") {
    if (!ops.has_multipoles) throw std::invalid_argument("Qxy needs dimension >= 3");
    return ops.multipoles.Qxy;
  }
  if (name == "Oxyz") {
    if (!ops.multipoles.Oxyz) throw std::invalid_argument("Oxyz needs dimension >= 4");
    return *ops.multipoles.Oxyz;
  }
  if (name == "Xxyzl") {
    if (!ops.multipoles.Xxyzl) throw std::invalid_argument("Xxyzl needs dimension 5");
    return *ops.multipoles.Xxyzl;
  }
  throw std::invalid_argument("unknown generator name: " + name);
}

namespace {

CMatrix named_product(GroupId group, const std::vector<std::string>& names) {
  if (names.empty()) return CMatrix::identity(group_dim(group));
  CMatrix m = generator_by_name(group, names[0]);
  for (size_t i = 1; i < names.size(); ++i) m = m * generator_by_name(group, names[i]);
  return m;
}

}  // namespace

double bond_energy(const ChainState& chain, int site_i, int site_j,
                   const std::vector<std::string>& ops_i,
                   const std::vector<std::string>& ops_j, double J) {
  validate_chain(chain);
  const int L = static_cast<int>(chain.sites.size());
  if (site_i < 0 || site_i >= L || site_j < 0 || site_j >= L)
    throw std::invalid_argument("bond_energy: site index out of range");
  const GroupId g = chain.sites.front().group;
  const cplx ei_val = expect(build_oracle(chain.sites[site_i]), named_product(g, ops_i));
  const cplx ej_val = expect(build_oracle(chain.sites[site_j]), named_product(g, ops_j));
  return J * (ei_val * ej_val).real();
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_cplx(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string fmt_point(const CoherentParams& p) {
  std::string s;
  for (size_t i = 0; i < p.values.size(); ++i) {
    if (i) s += ';';
    s += fmt_double(p.values[i]);
  }
  return s;
}

void push_if_deviating(std::vector<ReportEntry>& out, const std::string& formula,
                       const std::string& point, cplx paper, cplx oracle) {
  const double dev = std::abs(paper - oracle);
  if (dev > 1e-9) out.push_back({formula, point, paper, oracle, dev});
}

}  // namespace

std::string CompatibilityReport::to_csv() const {
  std::string s = "formula,point,paper_value,oracle_value,abs_dev\n";
  for (const ReportEntry& e : entries) {
    s += e.formula;
    s += ',';
    s += e.point;
    s += ',';
    s += fmt_cplx(e.paper_value);
    s += ',';
    s += fmt_cplx(e.oracle_value);
    s += ',';
    s += fmt_double(e.abs_dev);
    s += '\n';
  }
  return s;
}

CompatibilityReport compatibility_report(GroupId group, int n_samples, uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("compatibility_report: n_samples >= 1");
  CompatibilityReport rep;
  rep.group = group;
  Rng rng(seed);
  const std::string tag = group_to_string(group);
  const GroupOps& ops = group_ops(group);

  // Standing assumptions, recorded once per report.
  if (group == GroupId::SU3)
    rep.entries.push_back({tag + ".amp.assumption.reversed_order", "-", 0.0, 0.0, 0.0});
  if (group == GroupId::SU5)
    rep.entries.push_back({tag + ".amp.assumption.c4_f_read_as_f3", "-", 0.0, 0.0, 0.0});

  for (int i = 0; i < n_samples; ++i) {
    const CoherentParams p = sample_params(group, rng);
    const std::string point = fmt_point(p);
    const CoherentState oracle = build_oracle(p);

    // (a) closed-form amplitudes vs oracle amplitudes
    const ClosedFormResult cf = build_closed_form(p);
    for (int a = 0; a < oracle.amplitudes.dim(); ++a)
      push_if_deviating(rep.entries, tag + ".amp.C" + std::to_string(a), point,
                        cf.state.amplitudes[a], oracle.amplitudes[a]);
    if (cf.normalized)
      push_if_deviating(rep.entries, tag + ".amp.norm_defect", point, cplx(cf.norm_defect, 0.0),
                        0.0);

    // (b) published spin averages vs oracle expectations
    const SpinAverage avg = paper_average(p);
    push_if_deviating(rep.entries, tag + ".avg.Sp", point, avg.s_plus,
                      expect(oracle, ops.rep.Sp));
    push_if_deviating(rep.entries, tag + ".avg.Sm", point, avg.s_minus,
                      expect(oracle, ops.rep.Sm));
    push_if_deviating(rep.entries, tag + ".avg.Sz", point, avg.s_z, expect(oracle, ops.rep.Sz));
  }

  // (c) multipole reconciliation table
  if (ops.has_multipoles)
    for (const ReconciliationEntry& r : ops.multipoles.reconciliation)
      if (r.max_abs_dev > 1e-9)
        rep.entries.push_back({tag + ".gen." + r.op + ".ladder_vs_tabulated", "-",
                               cplx(r.max_abs_dev, 0.0), 0.0, r.max_abs_dev});

  // (d) dimension-5 truncated rotation series vs the exponential
  if (group == GroupId::SU5) {
    for (double theta : {0.1, 0.25, 0.5, 1.0, M_PI / 2}) {
      CMatrix diff = wigner_d_series(theta) - wigner_d(ops.rep, theta);
      const double dev = diff.max_abs();
      if (dev > 1e-9)
        rep.entries.push_back({tag + ".wigner.series_dev", "theta=" + fmt_double(theta),
                               cplx(dev, 0.0), 0.0, dev});
    }
  }

  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const ReportEntry& a, const ReportEntry& b) {
                     if (a.formula != b.formula) return a.formula < b.formula;
                     return a.abs_dev > b.abs_dev;
                   });
  return rep;
}

}  // namespace sunspin
