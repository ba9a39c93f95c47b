#pragma once

#include "sunspin/dynamics.hpp"

namespace sunspin {

/// exp(-i H t / hbar) psi0 for Hermitian H (dimension <= 256).
CVector propagate(const CMatrix& H, const CVector& psi0, double t, double hbar = 1.0);

/// Classical (product-ansatz, kBerry) trajectory against exact Schrodinger
/// evolution from the same initial coherent state, on a shared time grid.
struct CompareResult {
  double max_dev = 0.0;                  // max over time/site/component
  std::vector<double> times;
  std::vector<std::vector<double>> classical_obs;  // Sx,Sy,Sz per site
  std::vector<std::vector<double>> quantum_obs;
  bool aborted = false;                  // classical run hit a singular point
  std::string abort_reason;
};
CompareResult compare_quantum(const HamiltonianSpec& h, const std::vector<CoherentParams>& initial,
                              double t_max, double dt, double hbar = 1.0,
                              double cond_limit = 1e12, double sigma_floor = 1e-7,
                              double max_step_rad = 0.5);

/// Completeness check for the two-dimensional family:
/// || (2j+1)/(4pi) * Int |psi><psi| sin(theta) dtheta dphi - 1 ||_max,
/// Gauss-Legendre in theta, trapezoid in phi.
double unity_check(int n_theta, int n_phi);

/// Gauss-Legendre nodes/weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace sunspin
