#include "sunspin/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace sunspin {

namespace {

// Steps for the public gradient and symplectic-form operations.
constexpr double kGradStep = 1e-5;
constexpr double kOmegaStep = 1e-5;
// The integrator differences more finely: its error budget is divided by
// the smallest singular value of omega along the trajectory.
constexpr double kEomStep = 1e-6;
constexpr double kPaperGuard = 1e-6;

CMatrix named_product(GroupId group, const std::vector<std::string>& names) {
  if (names.empty()) return CMatrix::identity(group_dim(group));
  CMatrix m = generator_by_name(group, names[0]);
  for (size_t i = 1; i < names.size(); ++i) m = m * generator_by_name(group, names[i]);
  return m;
}

// Per-site operator products of one term, identity for untouched sites.
std::vector<CMatrix> site_matrices(const HamiltonianSpec& h, const HamiltonianTerm& t) {
  std::vector<CMatrix> mats(h.sites, CMatrix::identity(group_dim(h.group)));
  std::vector<bool> touched(h.sites, false);
  for (const auto& [site, names] : t.factors) {
    CMatrix m = named_product(h.group, names);
    mats[site] = touched[site] ? mats[site] * m : m;
    touched[site] = true;
  }
  return mats;
}

bool term_matches_adjoint(const HamiltonianTerm& a, const HamiltonianTerm& b) {
  // b == adjoint of a? Compare per-site op strings with order reversed and
  // Sp/Sm swapped, and conjugated coefficient.
  if (std::abs(std::conj(a.coeff) - b.coeff) > 1e-12) return false;
  auto canon = [&](const HamiltonianTerm& t, bool adjointed) {
    std::map<int, std::vector<std::string>> per_site;
    for (const auto& [site, names] : t.factors)
      per_site[site].insert(per_site[site].end(), names.begin(), names.end());
    if (adjointed)
      for (auto& [site, names] : per_site) {
        std::reverse(names.begin(), names.end());
        for (std::string& n : names) {
          if (n == "Sp") n = "Sm";
          else if (n == "Sm") n = "Sp";
        }
      }
    return per_site;
  };
  return canon(a, true) == canon(b, false);
}

long chain_dim(const HamiltonianSpec& h) {
  long d = 1;
  for (int i = 0; i < h.sites; ++i) {
    d *= group_dim(h.group);
    if (d > kMaxDim) return -1;
  }
  return d;
}

}  // namespace

void validate_hamiltonian(const HamiltonianSpec& h) {
  if (h.sites < 1) throw std::invalid_argument("hamiltonian: needs at least one site");
  for (const HamiltonianTerm& t : h.terms)
    for (const auto& [site, names] : t.factors) {
      if (site < 0 || site >= h.sites)
        throw std::invalid_argument("hamiltonian: site index out of range");
      for (const std::string& n : names) (void)generator_by_name(h.group, n);
    }
  if (chain_dim(h) > 0) {
    if (!assemble_matrix(h).is_hermitian(1e-12))
      throw std::invalid_argument("hamiltonian: assembled matrix is not Hermitian");
    return;
  }
  // Chain too large to assemble: require the term list to be closed under
  // adjoints (conservative; identities across terms are not recognized).
  std::vector<bool> used(h.terms.size(), false);
  for (size_t i = 0; i < h.terms.size(); ++i) {
    bool found = false;
    for (size_t j = 0; j < h.terms.size(); ++j) {
      if (used[j] && j != i) continue;
      if (term_matches_adjoint(h.terms[i], h.terms[j])) {
        found = true;
        if (j != i) used[j] = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("hamiltonian: term list is not self-adjoint");
  }
}

CMatrix assemble_matrix(const HamiltonianSpec& h) {
  const long dim = chain_dim(h);
  if (dim < 0) throw std::invalid_argument("assemble_matrix: chain exceeds the 256 cap");
  CMatrix total(static_cast<int>(dim), static_cast<int>(dim));
  for (const HamiltonianTerm& t : h.terms) {
    const std::vector<CMatrix> mats = site_matrices(h, t);
    CMatrix prod = mats[0];
    for (int s = 1; s < h.sites; ++s) prod = kron(prod, mats[s]);
    total += t.coeff * prod;
  }
  return total;
}

namespace {

// Energy from prebuilt per-site states; the product factorization over
// sites is exact for the product ansatz.
double energy_from_states(const HamiltonianSpec& h, const std::vector<CoherentState>& states) {
  cplx sum = 0.0;
  for (const HamiltonianTerm& t : h.terms) {
    cplx prod = t.coeff;
    std::vector<CMatrix> mats = site_matrices(h, t);
    for (int s = 0; s < h.sites; ++s) {
      bool identity = true;
      for (const auto& [site, names] : t.factors)
        if (site == s && !names.empty()) identity = false;
      if (!identity) prod *= expect(states[s], mats[s]);
    }
    sum += prod;
  }
  return sum.real();
}

std::vector<CoherentState> fast_states(const std::vector<CoherentParams>& sites) {
  std::vector<CoherentState> out;
  out.reserve(sites.size());
  for (const CoherentParams& p : sites) out.push_back(build_fast(p));
  return out;
}

// Gradient over the flattened parameter vector with the fast builder;
// only the perturbed site is rebuilt per coordinate.
std::vector<double> fast_grad(const HamiltonianSpec& h, const std::vector<CoherentParams>& sites,
                              double step = kGradStep) {
  const int n = param_count(h.group);
  std::vector<CoherentState> states = fast_states(sites);
  std::vector<double> grad(sites.size() * n, 0.0);
  for (size_t s = 0; s < sites.size(); ++s) {
    for (int a = 0; a < n; ++a) {
      CoherentParams hi = sites[s], lo = sites[s];
      hi.values[a] += step;
      lo.values[a] -= step;
      std::vector<CoherentState>& st = states;
      CoherentState saved = st[s];
      st[s] = build_fast(hi);
      const double ehi = energy_from_states(h, st);
      st[s] = build_fast(lo);
      const double elo = energy_from_states(h, st);
      st[s] = saved;
      grad[s * n + a] = (ehi - elo) / (2.0 * step);
    }
  }
  return grad;
}

RMatrix omega_from_derivatives(const std::vector<CVector>& d) {
  RMatrix w(static_cast<int>(d.size()));
  for (int a = 0; a < w.n; ++a)
    for (int b = a + 1; b < w.n; ++b) {
      const double v = -2.0 * dot(d[a], d[b]).imag();
      w.at(a, b) = v;
      w.at(b, a) = -v;
    }
  return w;
}

std::vector<CVector> fast_derivatives(const CoherentParams& p, double step) {
  const int n = param_count(p.group);
  std::vector<CVector> dpsi;
  dpsi.reserve(n);
  for (int a = 0; a < n; ++a) {
    CoherentParams hi = p, lo = p;
    hi.values[a] += step;
    lo.values[a] -= step;
    CVector d = build_fast(hi).amplitudes - build_fast(lo).amplitudes;
    d *= cplx(1.0 / (2.0 * step), 0.0);
    dpsi.push_back(std::move(d));
  }
  return dpsi;
}

// Gaussian elimination with partial pivoting (degeneracy is screened by
// the singular-value guard before the solve).
std::vector<double> solve_partial_pivot(RMatrix w, std::vector<double> b) {
  const int n = w.n;
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(w.at(r, col)) > std::abs(w.at(best, col))) best = r;
    if (best != col) {
      for (int c = 0; c < n; ++c) std::swap(w.a[best * n + c], w.a[col * n + c]);
      std::swap(b[best], b[col]);
    }
    const double piv = w.at(col, col);
    if (piv == 0.0) throw singular_point_error("omega pivot", 0.0);
    for (int r = col + 1; r < n; ++r) {
      const double f = w.at(r, col) / piv;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) w.at(r, c) -= f * w.at(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= w.at(r, c) * x[c];
    x[r] = s / w.at(r, r);
  }
  return x;
}

// Complete-pivoting elimination that tolerates rank deficiency: components
// not determined by the system come back as zero.
std::vector<double> solve_rank_tolerant(RMatrix w, std::vector<double> b) {
  const int n = w.n;
  std::vector<int> colperm(n);
  for (int i = 0; i < n; ++i) colperm[i] = i;
  int rank = 0;
  double first_piv = 0.0;
  for (int step = 0; step < n; ++step) {
    int br = step, bc = step;
    double best = 0.0;
    for (int r = step; r < n; ++r)
      for (int c = step; c < n; ++c)
        if (std::abs(w.at(r, c)) > best) {
          best = std::abs(w.at(r, c));
          br = r;
          bc = c;
        }
    if (step == 0) first_piv = best;
    if (best <= 1e-9 * std::max(first_piv, 1e-30)) break;
    if (br != step) {
      for (int c = 0; c < n; ++c) std::swap(w.a[br * n + c], w.a[step * n + c]);
      std::swap(b[br], b[step]);
    }
    if (bc != step) {
      for (int r = 0; r < n; ++r) std::swap(w.a[r * n + bc], w.a[r * n + step]);
      std::swap(colperm[bc], colperm[step]);
    }
    const double piv = w.at(step, step);
    for (int r = step + 1; r < n; ++r) {
      const double f = w.at(r, step) / piv;
      if (f == 0.0) continue;
      for (int c = step; c < n; ++c) w.at(r, c) -= f * w.at(step, c);
      b[r] -= f * b[step];
    }
    rank = step + 1;
  }
  std::vector<double> y(n, 0.0);
  for (int r = rank - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < rank; ++c) s -= w.at(r, c) * y[c];
    y[r] = s / w.at(r, r);
  }
  std::vector<double> x(n, 0.0);
  for (int i = 0; i < rank; ++i) x[colperm[i]] = y[i];
  return x;
}

}  // namespace

double classical_energy(const HamiltonianSpec& h, const std::vector<CoherentParams>& sites) {
  validate_hamiltonian(h);
  if (static_cast<int>(sites.size()) != h.sites)
    throw std::invalid_argument("classical_energy: site count mismatch");
  std::vector<CoherentState> states;
  states.reserve(sites.size());
  for (const CoherentParams& p : sites) states.push_back(build_oracle(p));
  return energy_from_states(h, states);
}

std::vector<double> grad_energy(const HamiltonianSpec& h,
                                const std::vector<CoherentParams>& sites, double step) {
  const int n = param_count(h.group);
  std::vector<double> grad(sites.size() * n, 0.0);
  for (size_t s = 0; s < sites.size(); ++s)
    for (int a = 0; a < n; ++a) {
      std::vector<CoherentParams> hi = sites, lo = sites;
      hi[s].values[a] += step;
      lo[s].values[a] -= step;
      grad[s * n + a] = (classical_energy(h, hi) - classical_energy(h, lo)) / (2.0 * step);
    }
  return grad;
}

RMatrix symplectic_form(const CoherentParams& p) {
  validate_params(p);
  return omega_from_derivatives(fast_derivatives(p, kOmegaStep));
}

EomMethod method_from_string(const std::string& s) {
  if (s == "berry") return EomMethod::kBerry;
  if (s == "paper") return EomMethod::kPaper;
  throw std::invalid_argument("unknown method: " + s);
}

namespace {

void guard(const char* name, double value) {
  if (std::abs(value) <= kPaperGuard) throw singular_point_error(name, value);
}

// The published right-hand sides, transcribed verbatim (hbar = 1 in the
// source text; the caller rescales). H derivatives arrive in the group's
// canonical parameter order.
std::vector<double> paper_rhs(GroupId group, const std::vector<double>& q,
                              const std::vector<double>& dH) {
  std::vector<double> v(q.size(), 0.0);
  const double theta = q[0];
  const double st = std::sin(theta), ct = std::cos(theta);
  switch (group) {
    case GroupId::SU2: {
      guard("sin(theta)", st);
      v[1] = dH[0] / st;  // phi_t
      v[0] = dH[1] / st;  // theta_t
      break;
    }
    case GroupId::SU3: {
      const double c2g = std::cos(2 * q[3]), s2g = std::sin(2 * q[3]);
      guard("sin(theta)", st);
      guard("cos(2g)", c2g);
      guard("sin(2g)", s2g);
      v[0] = -(dH[1] - ct * dH[2]) / (c2g * st);
      v[3] = -dH[2] / (2 * s2g);
      v[1] = dH[0] / (c2g * st);
      v[2] = -dH[3] / (2 * s2g) - ct * dH[0] / (c2g * st);
      break;
    }
    case GroupId::SU4: {
      const double cg = std::cos(q[3]), sg = std::sin(q[3]), s2g = std::sin(2 * q[3]);
      const double c2k = std::cos(2 * q[5]), s2k = std::sin(2 * q[5]);
      guard("sin(theta)", st);
      guard("cos(2k)", c2k);
      guard("sin(2k)", s2k);
      guard("cos(g)", cg);
      guard("sin(g)", sg);
      guard("sin(2g)", s2g);
      const double cg2 = cg * cg, cg3 = cg2 * cg, cg4 = cg2 * cg2;
      v[0] = (dH[1] - ct * dH[2]) / (c2k * cg2 * st);
      v[1] = -dH[0] / (c2k * cg2 * st);
      v[3] = dH[4] / (6 * c2k * cg3 * sg) - dH[2] / (c2k * s2g);
      v[2] = ct * dH[0] / (c2k * cg2 * st) + dH[3] / (2 * c2k * cg * sg) + dH[5] / (s2k * cg2);
      v[5] = dH[2] / (s2k * cg2) - dH[4] / (6 * s2k * cg4);
      v[4] = -dH[5] / (6 * s2k * cg4) - dH[3] / (6 * c2k * cg3 * sg);
      break;
    }
    case GroupId::SU5: {
      const double cg = std::cos(q[3]), sg = std::sin(q[3]), s2g = std::sin(2 * q[3]);
      const double ck = std::cos(q[5]), sk = std::sin(q[5]);
      const double c2n = std::cos(2 * q[7]), s2n = std::sin(2 * q[7]);
      guard("sin(theta)", st);
      guard("cos(2n)", c2n);
      guard("sin(2n)", s2n);
      guard("cos(g)", cg);
      guard("sin(g)", sg);
      guard("sin(2g)", s2g);
      guard("cos(k)", ck);
      guard("sin(k)", sk);
      const double cg2 = cg * cg, cg3 = cg2 * cg, cg4 = cg2 * cg2;
      const double ck2 = ck * ck, ck3 = ck2 * ck, ck4 = ck2 * ck2;
      v[0] = dH[1] / (c2n * cg2 * st * ck2) - ct * dH[2] / (c2n * cg2 * ck2 * st);
      v[1] = -dH[0] / (c2n * cg2 * ck2 * st);
      v[3] = dH[4] / (6 * c2n * cg3 * sg * ck4) - dH[6] / (3 * c2n * s2g * ck4);
      v[2] = ct * dH[0] / (c2n * cg2 * st * ck2) + dH[5] / (2 * c2n * cg2 * sk * ck) -
             dH[7] / (s2n * cg2 * ck2);
      v[5] = dH[6] / (6 * sk * cg2 * c2n * ck3) - dH[2] / (2 * sk * cg2 * ck * c2n);
      v[4] = dH[7] / (6 * s2n * cg4 * ck4) - dH[3] / (6 * c2n * cg3 * sg * ck4) -
             dH[7] / (s2n * cg2 * ck2);
      v[7] = dH[2] / (c2n * cg2 * ck2 * st) - dH[4] / (6 * s2n * cg4 * ck4);
      v[6] = -dH[3] / (cg * ck4 * s2n) - dH[5] / (cg2 * ck3 * c2n * sk);
      break;
    }
  }
  return v;
}

std::vector<CoherentParams> unflatten(GroupId group, int sites, const std::vector<double>& flat) {
  const int n = param_count(group);
  std::vector<CoherentParams> out(sites);
  for (int s = 0; s < sites; ++s) {
    out[s].group = group;
    out[s].values.assign(flat.begin() + s * n, flat.begin() + (s + 1) * n);
  }
  return out;
}

std::vector<double> flatten(const std::vector<CoherentParams>& sites) {
  std::vector<double> flat;
  for (const CoherentParams& p : sites)
    flat.insert(flat.end(), p.values.begin(), p.values.end());
  return flat;
}

}  // namespace

namespace {

// Singular values of the (real antisymmetric) form via the Hermitian matrix
// i*omega; exact up to roundoff, cheap at these sizes.
std::vector<double> omega_singular_values(const RMatrix& w, CMatrix* vectors = nullptr) {
  CMatrix iw(w.n, w.n);
  for (int r = 0; r < w.n; ++r)
    for (int c = 0; c < w.n; ++c) iw(r, c) = cplx(0.0, w.at(r, c));
  CMatrix v;
  std::vector<double> e;
  hermitian_eigen(iw, v, e);
  if (vectors) *vectors = v;
  for (double& x : e) x = std::abs(x);
  return e;
}

void guard_omega(const std::vector<double>& sigma, double cond_limit, double sigma_floor) {
  double lo = 1e300, hi = 0.0;
  for (double s : sigma) {
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (hi < 1e-9) throw singular_point_error("omega scale", hi);
  if (lo < std::max(sigma_floor, hi / cond_limit))
    throw singular_point_error("omega degeneracy", lo);
}

}  // namespace

std::vector<double> eom_rhs(const HamiltonianSpec& h, const std::vector<CoherentParams>& sites,
                            EomMethod method, double hbar, double cond_limit,
                            double sigma_floor) {
  if (static_cast<int>(sites.size()) != h.sites)
    throw std::invalid_argument("eom_rhs: site count mismatch");
  const int n = param_count(h.group);
  const std::vector<double> grad = fast_grad(h, sites, kEomStep);
  std::vector<double> vel(sites.size() * n, 0.0);
  for (size_t s = 0; s < sites.size(); ++s) {
    const std::vector<double> dH(grad.begin() + s * n, grad.begin() + (s + 1) * n);
    std::vector<double> v;
    if (method == EomMethod::kPaper) {
      v = paper_rhs(h.group, sites[s].values, dH);
    } else {
      const RMatrix w = omega_from_derivatives(fast_derivatives(sites[s], kEomStep));
      guard_omega(omega_singular_values(w), cond_limit, sigma_floor);
      v = solve_partial_pivot(w, dH);
    }
    for (int a = 0; a < n; ++a) vel[s * n + a] = v[a] / hbar;
  }
  return vel;
}

namespace {

void record_point(Trajectory& tr, const HamiltonianSpec& h, double t,
                  const std::vector<double>& flat) {
  const std::vector<CoherentParams> sites = unflatten(h.group, h.sites, flat);
  const std::vector<CoherentState> states = fast_states(sites);
  tr.times.push_back(t);
  tr.points.push_back(flat);
  tr.energies.push_back(energy_from_states(h, states));
  const GroupOps& ops = group_ops(h.group);
  std::vector<double> obs;
  obs.reserve(3 * states.size());
  for (const CoherentState& st : states) {
    obs.push_back(expect(st, ops.rep.Sx).real());
    obs.push_back(expect(st, ops.rep.Sy).real());
    obs.push_back(expect(st, ops.rep.Sz).real());
  }
  tr.observables.push_back(std::move(obs));
}

}  // namespace

Trajectory integrate(const HamiltonianSpec& h, const std::vector<CoherentParams>& initial,
                     double dt, int steps, EomMethod method, double hbar, double cond_limit,
                     double sigma_floor, double max_step_rad) {
  if (dt <= 0.0) throw std::invalid_argument("integrate: dt must be positive");
  if (steps < 1) throw std::invalid_argument("integrate: steps must be >= 1");
  validate_hamiltonian(h);

  Trajectory tr;
  tr.group = h.group;
  tr.sites = h.sites;
  tr.method = method;
  tr.hbar = hbar;

  std::vector<double> y = flatten(initial);
  auto rhs = [&](const std::vector<double>& flat) {
    std::vector<double> v =
        eom_rhs(h, unflatten(h.group, h.sites, flat), method, hbar, cond_limit, sigma_floor);
    double biggest = 0.0;
    for (double x : v) biggest = std::max(biggest, std::abs(x));
    if (biggest * dt > max_step_rad) throw singular_point_error("parameter step", biggest * dt);
    return v;
  };

  // A singular initial point propagates as an error; later ones abort.
  std::vector<double> k1 = rhs(y);
  record_point(tr, h, 0.0, y);

  const size_t m = y.size();
  for (int step = 0; step < steps; ++step) {
    try {
      if (step > 0) k1 = rhs(y);
      std::vector<double> y2(m), y3(m), y4(m);
      for (size_t i = 0; i < m; ++i) y2[i] = y[i] + 0.5 * dt * k1[i];
      const std::vector<double> k2 = rhs(y2);
      for (size_t i = 0; i < m; ++i) y3[i] = y[i] + 0.5 * dt * k2[i];
      const std::vector<double> k3 = rhs(y3);
      for (size_t i = 0; i < m; ++i) y4[i] = y[i] + dt * k3[i];
      const std::vector<double> k4 = rhs(y4);
      for (size_t i = 0; i < m; ++i)
        y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    } catch (const singular_point_error& e) {
      tr.aborted = true;
      tr.abort_reason = e.what();
      break;
    }
    record_point(tr, h, dt * (step + 1), y);
  }
  return tr;
}

cplx discrete_action(const std::vector<CoherentParams>& path, const HamiltonianSpec& h,
                     double eps, double hbar) {
  if (path.size() < 2) throw std::invalid_argument("discrete_action: need at least two points");
  if (h.sites != 1) throw std::invalid_argument("discrete_action: single-site paths only");
  const CMatrix H = assemble_matrix(h);
  const cplx i_eps(0.0, eps / hbar);
  cplx action = 0.0;
  CVector prev = build_oracle(path[0]).amplitudes;
  for (size_t k = 1; k < path.size(); ++k) {
    if (path[k].group != h.group) throw std::invalid_argument("discrete_action: group mismatch");
    const CVector cur = build_oracle(path[k]).amplitudes;
    const cplx ov = dot(cur, prev);
    if (std::abs(ov) < 1e-12)
      throw std::invalid_argument("discrete_action: vanishing overlap between slices");
    action += std::log(ov) - i_eps * dot(cur, H * prev) / ov;
    prev = cur;
  }
  return action;
}

namespace {

struct Embedding {
  std::vector<double> big;                 // parameters of the larger group
  std::vector<std::pair<int, int>> pairs;  // (big index, small index)
};

Embedding embed(GroupId from, GroupId to, const std::vector<double>& q) {
  Embedding e;
  if (from == GroupId::SU3 && to == GroupId::SU2) {
    e.big = {q[0], q[1], 0.0, 0.0};
    e.pairs = {{0, 0}, {1, 1}};
  } else if (from == GroupId::SU4 && to == GroupId::SU3) {
    // g = 0, beta = 0, and the published k takes the smaller group's g role.
    e.big = {q[0], q[1], q[2], 0.0, 0.0, q[3]};
    e.pairs = {{0, 0}, {1, 1}, {2, 2}, {5, 3}};
  } else if (from == GroupId::SU5 && to == GroupId::SU4) {
    // g = 0, m = 0, n -> k, k -> g.
    e.big = {q[0], q[1], q[2], 0.0, q[4], q[3], 0.0, q[5]};
    e.pairs = {{0, 0}, {1, 1}, {2, 2}, {4, 4}, {5, 3}, {7, 5}};
  } else {
    throw std::invalid_argument("reduce_check: unsupported group pair");
  }
  return e;
}

}  // namespace

ReduceReport reduce_check(GroupId from, GroupId to, int n_points, uint64_t seed) {
  ReduceReport rep;
  rep.from = from;
  rep.to = to;
  HamiltonianSpec h_small{to, 1, {{1.0, {{0, {"Sz"}}}}}};
  HamiltonianSpec h_big{from, 1, {{1.0, {{0, {"Sz"}}}}}};
  Rng rng(seed);
  for (int i = 0; i < n_points; ++i) {
    const CoherentParams ps = sample_interior(to, rng);
    const Embedding e = embed(from, to, ps.values);
    const CoherentParams pb{from, e.big};

    // Smaller group: regular solve at an interior point.
    const std::vector<double> vs = eom_rhs(h_small, {ps}, EomMethod::kBerry);

    // Larger group at the degenerate embedded point: rank-tolerant solve.
    const std::vector<double> gb = fast_grad(h_big, {pb});
    const RMatrix wb = symplectic_form(pb);
    const std::vector<double> vb = solve_rank_tolerant(wb, gb);

    // The smaller field placed into the larger chart (zeros elsewhere),
    // compared modulo the null directions of the degenerate form.
    std::vector<double> diff = vb;
    for (const auto& [bi, si] : e.pairs) diff[bi] -= vs[si];
    CMatrix vecs;
    const std::vector<double> sigma = omega_singular_values(wb, &vecs);
    double sig_max = 0.0;
    for (double s : sigma) sig_max = std::max(sig_max, s);
    for (int col = 0; col < wb.n; ++col) {
      if (sigma[col] < 1e-6 * std::max(1.0, sig_max)) continue;  // null direction
      cplx comp = 0.0;
      for (int r = 0; r < wb.n; ++r) comp += std::conj(vecs(r, col)) * diff[r];
      rep.max_dev = std::max(rep.max_dev, std::abs(comp));
    }
    ++rep.points;
  }
  return rep;
}

std::string method_comparison_report(GroupId group, int n_points, uint64_t seed) {
  HamiltonianSpec h{group, 1, {{1.0, {{0, {"Sz"}}}}}};
  Rng rng(seed);
  std::string csv = "point,coordinate,berry,paper,abs_dev\n";
  char buf[160];
  for (int i = 0; i < n_points; ++i) {
    const CoherentParams p = sample_interior(group, rng, 0.15);
    std::string point;
    for (size_t j = 0; j < p.values.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%s%.17g", j ? ";" : "", p.values[j]);
      point += buf;
    }
    const std::vector<double> vb = eom_rhs(h, {p}, EomMethod::kBerry);
    const std::vector<double> vp = eom_rhs(h, {p}, EomMethod::kPaper);
    const std::vector<std::string>& names = param_names(group);
    for (size_t a = 0; a < names.size(); ++a) {
      std::snprintf(buf, sizeof buf, ",%s,%.17g,%.17g,%.17g\n", names[a].c_str(), vb[a], vp[a],
                    std::abs(vb[a] - vp[a]));
      csv += point + buf;
    }
  }
  return csv;
}

}  // namespace sunspin
