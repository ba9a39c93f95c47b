#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sunspin/algebra.hpp"

namespace sunspin {

/// One spin irrep in the weight basis ordered highest weight first, so the
/// reference state is always (1,0,...,0)^T.
struct SpinRep {
  int two_s = 0;
  int dim = 0;
  double s = 0.0;
  CMatrix Sz, Sp, Sm, Sx, Sy;
};

/// Builds spin 1/2, 1, 3/2, 2 (two_s in 1..4).
SpinRep spin_rep(int two_s);

/// One row of the table reconciling the tabulated multipole matrices with
/// the ladder-operator forms prefactor * (S+^k - S-^k).
struct ReconciliationEntry {
  std::string op;       // e.g. "quadrupole"
  int dim = 0;
  double max_abs_dev = 0.0;
};

/// The multipole operators as explicitly tabulated, dimension permitting:
/// quadrupole for dims 3..5, octupole for dims 4..5, hexadecapole for dim 5.
/// The tabulated matrices are normative; the ladder-operator forms are only
/// evaluated for the reconciliation table.
struct MultipoleSet {
  int dim = 0;
  CMatrix Qxy;
  std::optional<CMatrix> Oxyz;
  std::optional<CMatrix> Xxyzl;
  std::vector<ReconciliationEntry> reconciliation;
};

MultipoleSet multipole_ops(const SpinRep& rep);

}  // namespace sunspin
