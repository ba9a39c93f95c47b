#include "sunspin/quantum.hpp"

#include <cmath>

namespace sunspin {

namespace {

const cplx kI(0.0, 1.0);

}  // namespace

CVector propagate(const CMatrix& H, const CVector& psi0, double t, double hbar) {
  if (!H.is_hermitian(1e-10)) throw std::invalid_argument("propagate: H must be Hermitian");
  if (H.cols() != psi0.dim()) throw std::invalid_argument("propagate: dimension mismatch");
  return expm((-kI * t / hbar) * H) * psi0;
}

CompareResult compare_quantum(const HamiltonianSpec& h, const std::vector<CoherentParams>& initial,
                              double t_max, double dt, double hbar, double cond_limit,
                              double sigma_floor, double max_step_rad) {
  validate_hamiltonian(h);
  const int steps = static_cast<int>(std::llround(t_max / dt));

  // Quantum side: product initial state, one stepper matrix reused.
  const CMatrix H = assemble_matrix(h);  // throws beyond the 256 cap
  CVector psi = build_oracle(initial[0]).amplitudes;
  for (size_t s = 1; s < initial.size(); ++s) {
    const CVector next = build_oracle(initial[s]).amplitudes;
    CVector merged(psi.dim() * next.dim());
    for (int i = 0; i < psi.dim(); ++i)
      for (int j = 0; j < next.dim(); ++j) merged[i * next.dim() + j] = psi[i] * next[j];
    psi = merged;
  }
  const CMatrix U = expm((-kI * dt / hbar) * H);

  // Per-site observables on the chain Hilbert space.
  const GroupOps& ops = group_ops(h.group);
  const int d = group_dim(h.group);
  std::vector<CMatrix> site_obs;
  for (int s = 0; s < h.sites; ++s)
    for (const CMatrix* g : {&ops.rep.Sx, &ops.rep.Sy, &ops.rep.Sz}) {
      CMatrix m = s == 0 ? *g : CMatrix::identity(d);
      for (int q = 1; q < h.sites; ++q) m = kron(m, q == s ? *g : CMatrix::identity(d));
      site_obs.push_back(m);
    }

  // Classical side.
  const Trajectory tr = integrate(h, initial, dt, steps, EomMethod::kBerry, hbar, cond_limit,
                                  sigma_floor, max_step_rad);

  CompareResult out;
  out.aborted = tr.aborted;
  out.abort_reason = tr.abort_reason;
  const size_t n_times = tr.times.size();
  for (size_t k = 0; k < n_times; ++k) {
    out.times.push_back(tr.times[k]);
    out.classical_obs.push_back(tr.observables[k]);
    std::vector<double> qobs;
    qobs.reserve(site_obs.size());
    for (const CMatrix& m : site_obs) qobs.push_back(dot(psi, m * psi).real());
    out.quantum_obs.push_back(qobs);
    for (size_t j = 0; j < qobs.size(); ++j)
      out.max_dev = std::max(out.max_dev, std::abs(qobs[j] - tr.observables[k][j]));
    psi = U * psi;
  }
  return out;
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = 0.5 * (b - a) * x + 0.5 * (b + a);
    weights[i] = (b - a) / ((1.0 - x * x) * pp * pp);
  }
}

double unity_check(int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) throw std::invalid_argument("unity_check: orders must be >= 2");
  std::vector<double> th, w;
  gauss_legendre(n_theta, 0.0, M_PI, th, w);
  // Compensated accumulation keeps the node count out of the error floor.
  cplx sum[2][2] = {}, comp[2][2] = {};
  for (int i = 0; i < n_theta; ++i) {
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * M_PI * j / n_phi;
      const CoherentParams p{GroupId::SU2, {th[i], phi}};
      const CVector psi = build_oracle(p).amplitudes;
      const double weight = w[i] * (2.0 * M_PI / n_phi) * std::sin(th[i]);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          const cplx y = weight * psi[r] * std::conj(psi[c]) - comp[r][c];
          const cplx t = sum[r][c] + y;
          comp[r][c] = (t - sum[r][c]) - y;
          sum[r][c] = t;
        }
    }
  }
  CMatrix acc(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) acc(r, c) = sum[r][c];
  acc *= cplx(2.0 / (4.0 * M_PI), 0.0);  // (2j+1)/(4pi) at j = 1/2
  acc -= CMatrix::identity(2);
  return acc.max_abs();
}

}  // namespace sunspin
