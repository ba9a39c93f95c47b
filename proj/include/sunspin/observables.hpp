#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sunspin/coherent.hpp"

namespace sunspin {

/// Product-ansatz chain: one coherent parameter point per site, same group.
struct ChainState {
  std::vector<CoherentParams> sites;
};

void validate_chain(const ChainState& chain);

/// <psi|A|psi>.
cplx expect(const CoherentState& state, const CMatrix& op);

/// The published closed-form spin averages, evaluated exactly as printed
/// (no correction; disagreements with the oracle land in the report).
struct SpinAverage {
  cplx s_plus;
  cplx s_minus;
  double s_z = 0.0;
};
SpinAverage paper_average(const CoherentParams& p);

/// J * product of single-site expectations for a two-site operator product,
/// exact for product states.
double bond_energy(const ChainState& chain, int site_i, int site_j,
                   const std::vector<std::string>& ops_i,
                   const std::vector<std::string>& ops_j, double J);

/// Look up a generator matrix by grammar name (Sx, Sy, Sz, Sp, Sm, Qxy,
/// Oxyz, Xxyzl) for one group.
const CMatrix& generator_by_name(GroupId group, const std::string& name);

/// One reconciliation row: a published formula evaluated at a sample point
/// against the oracle value.
struct ReportEntry {
  std::string formula;
  std::string point;
  cplx paper_value;
  cplx oracle_value;
  double abs_dev = 0.0;
};

struct CompatibilityReport {
  GroupId group = GroupId::SU2;
  std::vector<ReportEntry> entries;
  std::string to_csv() const;  // header: formula,point,paper_value,oracle_value,abs_dev
};

/// Samples n points with the given seed, compares closed-form amplitudes,
/// published spin averages, the multipole reconciliation table and (dim 5)
/// the truncated rotation series against their oracles, and returns every
/// deviation above 1e-9, sorted by formula id then deviation descending.
CompatibilityReport compatibility_report(GroupId group, int n_samples, uint64_t seed);

}  // namespace sunspin
