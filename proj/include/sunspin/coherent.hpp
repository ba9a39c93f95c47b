#pragma once

#include <string>
#include <vector>

#include "sunspin/algebra.hpp"
#include "sunspin/generators.hpp"
#include "sunspin/rng.hpp"

namespace sunspin {

enum class GroupId { SU2, SU3, SU4, SU5 };

int group_dim(GroupId g);                 // 2..5
int param_count(GroupId g);               // 2, 4, 6, 8
const std::vector<std::string>& param_names(GroupId g);
GroupId group_from_string(const std::string& name);  // "su2".."su5"
std::string group_to_string(GroupId g);

/// Shared generator matrices for one group: the spin irrep of matching
/// dimension plus its multipole set (dimension permitting).
struct GroupOps {
  SpinRep rep;
  MultipoleSet multipoles;  // dim >= 3 only; dim 2 holds an empty set
  bool has_multipoles = false;
};
const GroupOps& group_ops(GroupId g);

/// Real parameter point on one group's coherent-state chart, in the group's
/// canonical order: SU2 (theta,phi); SU3 (theta,phi,gamma,g);
/// SU4 (theta,phi,gamma,g,beta,k); SU5 (theta,phi,gamma,g,beta,k,m,n).
struct CoherentParams {
  GroupId group = GroupId::SU2;
  std::vector<double> values;
};

void validate_params(const CoherentParams& p);

struct CoherentState {
  GroupId group = GroupId::SU2;
  CVector amplitudes;
};

/// Ground-truth construction: the group's exact sequence of operator
/// exponentials applied to the reference state (1,0,...,0)^T.
CoherentState build_oracle(const CoherentParams& p);

/// Same construction as build_oracle, but through cached eigendecompositions
/// of the fixed factor generators instead of per-call series exponentials.
/// Used on integration hot paths; agrees with build_oracle to machine
/// precision (pinned by test).
CoherentState build_fast(const CoherentParams& p);

/// Cyclic Jacobi diagonalization of a small Hermitian matrix, a = v diag(e) v+.
/// Backs the fast state builder and the symplectic-form rank analysis.
void hermitian_eigen(const CMatrix& a, CMatrix& v, std::vector<double>& e);

struct ClosedFormResult {
  CoherentState state;
  bool normalized = false;   // set when the raw formulas missed unit norm
  double norm_defect = 0.0;  // | ||C|| - 1 | before any normalization
};

/// The published closed-form coefficients, evaluated as printed (including
/// the truncated power series for dimension 5). Exact for SU(2)/SU(3);
/// deviations from the oracle for SU(4)/SU(5) are surfaced through the
/// compatibility report rather than patched here.
ClosedFormResult build_closed_form(const CoherentParams& p);

/// exp(-i theta Sy). Closed trigonometric forms for dims 2..4; the matrix
/// exponential for dim 5.
CMatrix wigner_d(const SpinRep& rep, double theta);

/// Dimension-5 rotation assembled from the published degree-10 truncated
/// series (valid near theta = 0; deviation from expm grows like theta^12).
CMatrix wigner_d_series(double theta);

/// <psi(p1)|psi(p2)> from oracle amplitudes. Groups must match.
cplx overlap(const CoherentParams& p1, const CoherentParams& p2);

/// State and central-difference parameter derivatives of the oracle.
struct StateDerivatives {
  CVector psi;
  std::vector<CVector> dpsi;  // one per parameter
};
StateDerivatives state_derivatives(const CoherentParams& p, double step);

/// Kinetic one-form A_a = Re[i <psi|d_a psi>] (hbar = 1) by central
/// differences with step 1e-6. The global phase is whatever the exponential
/// product produces; no gauge fixing.
std::vector<double> berry_connection(const CoherentParams& p);

/// Draw a parameter point with the standard sampling recipe: theta in
/// (0.1, pi-0.1), cyclic angles in [0, 2pi), g/k/n in (-1, 1).
CoherentParams sample_params(GroupId g, Rng& rng);

/// Same recipe, but rejects points within `margin` of the chart's singular
/// denominators (sin theta, sin 2g, cos 2g, ... as applicable per group).
CoherentParams sample_interior(GroupId g, Rng& rng, double margin = 0.1);

/// Values of this group's singular denominators at p, smallest first.
double min_denominator(const CoherentParams& p);

}  // namespace sunspin
