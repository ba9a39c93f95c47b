#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sunspin/observables.hpp"

namespace sunspin {

/// One coefficient * generator-product term over one or more sites.
/// Factors at the same site multiply in the listed order.
struct HamiltonianTerm {
  cplx coeff;
  std::vector<std::pair<int, std::vector<std::string>>> factors;  // (site, op names)
};

struct HamiltonianSpec {
  GroupId group = GroupId::SU2;
  int sites = 1;
  std::vector<HamiltonianTerm> terms;
};

/// Rejects unknown generator names, out-of-range site indices, and
/// assemblies that are not Hermitian to 1e-12. Chains whose full matrix
/// would exceed the 256 cap are checked termwise for self-adjointness.
void validate_hamiltonian(const HamiltonianSpec& h);

/// Full matrix over the chain Hilbert space (identity padding on untouched
/// sites). Requires dim^sites <= 256.
CMatrix assemble_matrix(const HamiltonianSpec& h);

/// Sum over terms of coeff * product of per-site oracle expectations.
double classical_energy(const HamiltonianSpec& h, const std::vector<CoherentParams>& sites);

/// Central finite differences of the energy over the flattened per-site
/// parameter vector, step 1e-5 by default.
std::vector<double> grad_energy(const HamiltonianSpec& h,
                                const std::vector<CoherentParams>& sites, double step = 1e-5);

/// Small real matrix (used for the symplectic form).
struct RMatrix {
  int n = 0;
  std::vector<double> a;
  explicit RMatrix(int dim = 0) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}
  double& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  double at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
};

/// omega_ab = d_a A_b - d_b A_a for one site, evaluated as
/// -2 Im <d_a psi | d_b psi> with central differences (step 1e-5), which is
/// the same two-form without the noise of differencing A itself.
/// Antisymmetric exactly by construction.
RMatrix symplectic_form(const CoherentParams& p);

enum class EomMethod { kBerry, kPaper };
EomMethod method_from_string(const std::string& s);  // "berry" | "paper"

/// Raised when a requested evaluation point sits on (or too near) the
/// chart's singular set; carries the offending quantity by name.
class singular_point_error : public std::runtime_error {
 public:
  singular_point_error(const std::string& what_quantity, double value)
      : std::runtime_error("singular point: " + what_quantity + " = " + std::to_string(value)),
        quantity(what_quantity) {}
  std::string quantity;
};

/// Parameter velocities for the whole chain (flattened site-major).
/// kBerry solves omega qdot = grad H per site (block-diagonal form);
/// kPaper evaluates the published per-group right-hand sides verbatim.
/// kBerry refuses points where omega is degenerate: its smallest singular
/// value (computed exactly; the form is tiny) below max(sigma_floor,
/// sigma_max / cond_limit). Finite differencing floors measurable
/// degeneracy near 1e-10, which the absolute sigma_floor catches.
std::vector<double> eom_rhs(const HamiltonianSpec& h, const std::vector<CoherentParams>& sites,
                            EomMethod method, double hbar = 1.0, double cond_limit = 1e12,
                            double sigma_floor = 1e-7);

struct Trajectory {
  GroupId group = GroupId::SU2;
  int sites = 1;
  EomMethod method = EomMethod::kBerry;
  double hbar = 1.0;
  std::vector<double> times;
  std::vector<std::vector<double>> points;    // flattened params per time
  std::vector<double> energies;
  std::vector<std::vector<double>> observables;  // Sx,Sy,Sz per site per time
  bool aborted = false;
  std::string abort_reason;
};

/// Fixed-step classical fourth-order Runge-Kutta. A singular point mid-run
/// aborts cleanly, returning the partial trajectory flagged; a singular
/// initial point throws. A parameter motion above max_step_rad per step is
/// treated as a singular-set crossing (chart velocities blow up there).
Trajectory integrate(const HamiltonianSpec& h, const std::vector<CoherentParams>& initial,
                     double dt, int steps, EomMethod method, double hbar = 1.0,
                     double cond_limit = 1e12, double sigma_floor = 1e-7,
                     double max_step_rad = 0.5);

/// Time-sliced action: sum over consecutive pairs of
/// ln<psi_k|psi_{k-1}> - (i eps/hbar) <psi_k|H|psi_{k-1}> / <psi_k|psi_{k-1}>.
cplx discrete_action(const std::vector<CoherentParams>& path, const HamiltonianSpec& h,
                     double eps, double hbar = 1.0);

/// Embeds sampled points of the smaller group into the larger one by the
/// published substitution rule and compares the two kBerry vector fields
/// (H = Sz on each side). The embedded points are chart-degenerate by
/// construction (the substitution zeroes the quadrupole angle, collapsing
/// the gamma/beta split to pure gauge), so the larger side is solved
/// rank-tolerantly and the comparison projects onto the range of its
/// symplectic form: deviations along genuine chart directions count, null
/// directions do not.
struct ReduceReport {
  GroupId from = GroupId::SU3;
  GroupId to = GroupId::SU2;
  int points = 0;
  double max_dev = 0.0;
};
ReduceReport reduce_check(GroupId from, GroupId to, int n_points, uint64_t seed);

/// Deterministic per-coordinate comparison of the two EOM routes at sampled
/// interior points (H = Sz). CSV columns: point,coordinate,berry,paper,abs_dev.
std::string method_comparison_report(GroupId group, int n_points, uint64_t seed);

}  // namespace sunspin
