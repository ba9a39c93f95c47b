#include "sunspin/verify.hpp"

#include <cmath>
#include <cstdio>

#include "sunspin/quantum.hpp"

namespace sunspin {

namespace {

const cplx kI(0.0, 1.0);
const GroupId kGroups[] = {GroupId::SU2, GroupId::SU3, GroupId::SU4, GroupId::SU5};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

CMatrix random_matrix(Rng& rng, int n, double scale) {
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = cplx(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
  return m;
}

CMatrix random_antihermitian(Rng& rng, int n, double scale) {
  CMatrix m = random_matrix(rng, n, scale);
  return cplx(0.5, 0.0) * (m - m.adjoint());
}

CheckResult bounded(const std::string& name, double value, double tol) {
  return {name, value <= tol, "max " + fmt(value) + " vs " + fmt(tol)};
}

CheckResult check_expm_inverse() {
  // Entries in the unit box keep ||A|| within the stated bound of 10 while
  // staying clear of the e^(2 alpha) * eps cancellation floor of the
  // product itself, which crosses 1e-12 near the norm boundary.
  Rng rng(11);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    CMatrix a = random_matrix(rng, 5, 1.0);
    CMatrix p = expm(a) * expm(cplx(-1.0, 0.0) * a) - CMatrix::identity(5);
    worst = std::max(worst, p.max_abs());
  }
  return bounded("algebra.expm_inverse", worst, 1e-12);
}

CheckResult check_expm_unitary() {
  Rng rng(12);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    CMatrix u = expm(random_antihermitian(rng, 5, 2.0));
    CMatrix p = u.adjoint() * u - CMatrix::identity(5);
    worst = std::max(worst, p.max_abs());
  }
  return bounded("algebra.expm_unitary", worst, 1e-12);
}

CheckResult check_expm_blockdiag() {
  Rng rng(13);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    CMatrix a = random_matrix(rng, 3, 1.0), b = random_matrix(rng, 4, 1.0);
    CMatrix block(7, 7);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) block(r, c) = a(r, c);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) block(3 + r, 3 + c) = b(r, c);
    CMatrix eb = expm(block);
    CMatrix ea = expm(a), eb2 = expm(b);
    double dev = 0.0;
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 7; ++c) {
        cplx want = 0.0;
        if (r < 3 && c < 3) want = ea(r, c);
        if (r >= 3 && c >= 3) want = eb2(r - 3, c - 3);
        dev = std::max(dev, std::abs(eb(r, c) - want));
      }
    worst = std::max(worst, dev);
  }
  return bounded("algebra.expm_blockdiag", worst, 1e-12);
}

CheckResult check_kron_mixed() {
  Rng rng(14);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    CMatrix a = random_matrix(rng, 3, 1.0), c = random_matrix(rng, 3, 1.0);
    CMatrix b = random_matrix(rng, 4, 1.0), d = random_matrix(rng, 4, 1.0);
    CMatrix lhs = kron(a, b) * kron(c, d);
    CMatrix rhs = kron(a * c, b * d);
    worst = std::max(worst, (lhs - rhs).max_abs());
  }
  return bounded("algebra.kron_mixed_product", worst, 1e-12);
}

CheckResult check_commutators() {
  double worst = 0.0;
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const SpinRep r = spin_rep(two_s);
    worst = std::max(worst, (commutator(r.Sz, r.Sp) - r.Sp).max_abs());
    worst = std::max(worst, (commutator(r.Sp, r.Sm) - cplx(2.0, 0.0) * r.Sz).max_abs());
    CMatrix casimir = r.Sx * r.Sx + r.Sy * r.Sy + r.Sz * r.Sz;
    casimir -= cplx(r.s * (r.s + 1.0), 0.0) * CMatrix::identity(r.dim);
    worst = std::max(worst, casimir.max_abs());
  }
  return bounded("generators.su2_relations", worst, 1e-12);
}

CheckResult check_multipoles() {
  for (int two_s = 2; two_s <= 4; ++two_s) {
    const MultipoleSet m1 = multipole_ops(spin_rep(two_s));
    const MultipoleSet m2 = multipole_ops(spin_rep(two_s));
    std::vector<const CMatrix*> ops = {&m1.Qxy};
    if (m1.Oxyz) ops.push_back(&*m1.Oxyz);
    if (m1.Xxyzl) ops.push_back(&*m1.Xxyzl);
    for (const CMatrix* op : ops)
      if (!op->is_hermitian(1e-12) || std::abs(op->trace()) > 1e-12)
        return {"generators.multipoles", false, "not hermitian/traceless"};
    for (size_t i = 0; i < m1.reconciliation.size(); ++i)
      if (m1.reconciliation[i].max_abs_dev != m2.reconciliation[i].max_abs_dev)
        return {"generators.multipoles", false, "reconciliation not deterministic"};
  }
  return {"generators.multipoles", true, ""};
}

CheckResult check_oracle_norm() {
  Rng rng(21);
  double worst = 0.0;
  for (GroupId g : kGroups)
    for (int i = 0; i < 200; ++i)
      worst = std::max(worst, std::abs(build_oracle(sample_params(g, rng)).amplitudes.norm() - 1.0));
  return bounded("coherent.oracle_norm", worst, 1e-12);
}

CheckResult check_closed_vs_oracle() {
  Rng rng(22);
  double worst = 0.0;
  for (GroupId g : {GroupId::SU2, GroupId::SU3})
    for (int i = 0; i < 200; ++i) {
      const CoherentParams p = sample_params(g, rng);
      const CVector a = build_closed_form(p).state.amplitudes;
      const CVector b = build_oracle(p).amplitudes;
      for (int j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    }
  return bounded("coherent.closed_vs_oracle_su2_su3", worst, 1e-10);
}

CheckResult check_fast_vs_oracle() {
  Rng rng(23);
  double worst = 0.0;
  for (GroupId g : kGroups)
    for (int i = 0; i < 100; ++i) {
      const CoherentParams p = sample_params(g, rng);
      const CVector a = build_fast(p).amplitudes;
      const CVector b = build_oracle(p).amplitudes;
      for (int j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    }
  return bounded("coherent.fast_vs_oracle", worst, 1e-12);
}

CheckResult check_wigner_subgroup() {
  Rng rng(24);
  double worst = 0.0;
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const SpinRep rep = spin_rep(two_s);
    for (int i = 0; i < 20; ++i) {
      const double t1 = rng.uniform(-3.0, 3.0), t2 = rng.uniform(-3.0, 3.0);
      CMatrix lhs = wigner_d(rep, t1) * wigner_d(rep, t2);
      worst = std::max(worst, (lhs - wigner_d(rep, t1 + t2)).max_abs());
    }
  }
  return bounded("coherent.wigner_subgroup", worst, 1e-12);
}

CheckResult check_overlap_props() {
  Rng rng(25);
  double worst = 0.0;
  for (GroupId g : kGroups)
    for (int i = 0; i < 50; ++i) {
      const CoherentParams p1 = sample_params(g, rng), p2 = sample_params(g, rng);
      const cplx o12 = overlap(p1, p2), o21 = overlap(p2, p1);
      worst = std::max(worst, std::abs(o12 - std::conj(o21)));
      worst = std::max(worst, std::max(0.0, std::abs(o12) - 1.0));
    }
  return bounded("coherent.overlap_props", worst, 1e-12);
}

CheckResult check_berry_kinetic() {
  Rng rng(26);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const CoherentParams p2 = sample_params(GroupId::SU2, rng);
    const std::vector<double> a2 = berry_connection(p2);
    worst = std::max(worst, std::abs(a2[0]));
    worst = std::max(worst, std::abs(a2[1] - 0.5 * std::cos(p2.values[0])));
    const CoherentParams p3 = sample_params(GroupId::SU3, rng);
    const std::vector<double> a3 = berry_connection(p3);
    const double c2g = std::cos(2.0 * p3.values[3]);
    worst = std::max(worst, std::abs(a3[0]));
    worst = std::max(worst, std::abs(a3[1] - c2g * std::cos(p3.values[0])));
    worst = std::max(worst, std::abs(a3[2] - c2g));
    worst = std::max(worst, std::abs(a3[3]));
  }
  return bounded("coherent.berry_vs_kinetic_forms", worst, 1e-6);
}

CheckResult check_expect_props() {
  Rng rng(31);
  double worst = 0.0, bound_excess = 0.0;
  for (GroupId g : kGroups) {
    const GroupOps& ops = group_ops(g);
    for (int i = 0; i < 50; ++i) {
      const CoherentState st = build_oracle(sample_params(g, rng));
      worst = std::max(worst, std::abs(expect(st, ops.rep.Sz).imag()));
      worst = std::max(worst, std::abs(expect(st, ops.rep.Sx).imag()));
      bound_excess =
          std::max(bound_excess, std::abs(expect(st, ops.rep.Sz).real()) - ops.rep.s);
    }
  }
  if (worst > 1e-12) return {"observables.hermitian_expect", false, "imag " + fmt(worst)};
  return bounded("observables.sz_bound", bound_excess, 1e-12);
}

CheckResult check_bond_vs_kron() {
  Rng rng(32);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    ChainState chain{{sample_params(GroupId::SU2, rng), sample_params(GroupId::SU2, rng)}};
    const double e = bond_energy(chain, 0, 1, {"Sz"}, {"Sz"}, 1.0);
    const GroupOps& ops = group_ops(GroupId::SU2);
    const CVector a = build_oracle(chain.sites[0]).amplitudes;
    const CVector b = build_oracle(chain.sites[1]).amplitudes;
    CVector prod(4);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) prod[r * 2 + c] = a[r] * b[c];
    const CMatrix zz = kron(ops.rep.Sz, ops.rep.Sz);
    worst = std::max(worst, std::abs(e - dot(prod, zz * prod).real()));
  }
  return bounded("observables.bond_vs_kron", worst, 1e-12);
}

CheckResult check_report_deterministic() {
  const std::string a = compatibility_report(GroupId::SU4, 50, 7).to_csv();
  const std::string b = compatibility_report(GroupId::SU4, 50, 7).to_csv();
  return {"observables.report_deterministic", a == b, ""};
}

CheckResult check_energy_conservation() {
  // One long SU(2) run and one shorter SU(3) run with a mixed Hamiltonian.
  HamiltonianSpec h2{GroupId::SU2, 1, {{1.0, {{0, {"Sz"}}}}, {0.4, {{0, {"Sx"}}}}}};
  Trajectory t2 = integrate(h2, {{GroupId::SU2, {1.1, 0.4}}}, 1e-3, 10000, EomMethod::kBerry);
  HamiltonianSpec h3{GroupId::SU3, 1, {{1.0, {{0, {"Sz"}}}}, {0.3, {{0, {"Sx", "Sx"}}}}}};
  Trajectory t3 = integrate(h3, {{GroupId::SU3, {1.0, 0.5, 0.7, 0.4}}}, 1e-3, 3000,
                            EomMethod::kBerry);
  double worst = 0.0;
  for (const Trajectory* tr : {&t2, &t3}) {
    if (tr->aborted) return {"dynamics.energy_conservation", false, "aborted"};
    const double e0 = tr->energies.front();
    for (double e : tr->energies)
      worst = std::max(worst, std::abs(e - e0) / std::max(1.0, std::abs(e0)));
  }
  return bounded("dynamics.energy_conservation", worst, 1e-9);
}

CheckResult check_omega() {
  Rng rng(41);
  double anti = 0.0;
  for (GroupId g : kGroups)
    for (int i = 0; i < 20; ++i) {
      const RMatrix w = symplectic_form(sample_interior(g, rng));
      for (int r = 0; r < w.n; ++r)
        for (int c = 0; c < w.n; ++c) anti = std::max(anti, std::abs(w.at(r, c) + w.at(c, r)));
    }
  return bounded("dynamics.omega_antisymmetric", anti, 0.0);
}

CheckResult check_orthogonality() {
  Rng rng(42);
  double worst = 0.0;
  for (GroupId g : kGroups) {
    HamiltonianSpec h{g, 1, {{1.0, {{0, {"Sz"}}}}, {0.3, {{0, {"Sx"}}}}}};
    for (int i = 0; i < 10; ++i) {
      const CoherentParams p = sample_interior(g, rng);
      const std::vector<double> v = eom_rhs(h, {p}, EomMethod::kBerry);
      auto along = [&](double eps) {
        CoherentParams hi = p, lo = p;
        for (size_t j = 0; j < v.size(); ++j) {
          hi.values[j] += eps * v[j];
          lo.values[j] -= eps * v[j];
        }
        return (classical_energy(h, {hi}) - classical_energy(h, {lo})) / (2 * eps);
      };
      double speed = 0.0;
      for (double x : v) speed = std::max(speed, std::abs(x));
      worst = std::max(worst,
                       std::abs((4.0 * along(5e-4) - along(1e-3)) / 3.0) / std::max(1.0, speed));
    }
  }
  return bounded("dynamics.energy_orthogonality", worst, 1e-9);
}

CheckResult check_action() {
  HamiltonianSpec h0{GroupId::SU2, 1, {}};
  std::vector<CoherentParams> constant(5, CoherentParams{GroupId::SU2, {0.7, 0.3}});
  const cplx a0 = discrete_action(constant, h0, 0.1);
  if (std::abs(a0) > 1e-14) return {"dynamics.action_constant_zero", false, fmt(std::abs(a0))};

  // Loop Berry phase: sum of Im ln overlaps around a latitude vs half the
  // enclosed cos(theta) flux.
  const double theta = 1.1;
  const int n = 4000;
  double phase = 0.0;
  CoherentParams prev{GroupId::SU2, {theta, 0.0}};
  for (int k = 1; k <= n; ++k) {
    CoherentParams cur{GroupId::SU2, {theta, 2.0 * M_PI * k / n}};
    phase += std::arg(overlap(cur, prev));
    prev = cur;
  }
  const double want = 0.5 * std::cos(theta) * 2.0 * M_PI;
  const double dev = std::abs(phase - want);
  return {"dynamics.action_loop_phase", dev < 1e-3, "dev " + fmt(dev)};
}

CheckResult check_method_report_deterministic() {
  const std::string a = method_comparison_report(GroupId::SU3, 20, 9);
  const std::string b = method_comparison_report(GroupId::SU3, 20, 9);
  return {"dynamics.method_report_deterministic", a == b, ""};
}

CheckResult check_propagate() {
  Rng rng(51);
  const CMatrix m = random_matrix(rng, 4, 1.0);
  const CMatrix h = cplx(0.5, 0.0) * (m + m.adjoint());
  CVector psi(4);
  for (int i = 0; i < 4; ++i) psi[i] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  psi *= cplx(1.0 / psi.norm(), 0.0);
  const CVector a = propagate(h, psi, 0.9);
  const CVector b = propagate(h, propagate(h, psi, 0.4), 0.5);
  double worst = std::abs(a.norm() - 1.0);
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return bounded("quantum.propagate_semigroup", worst, 1e-12);
}

CheckResult check_unity_monotone() {
  double prev = 1e300;
  for (int n : {8, 16, 32, 64}) {
    const double dev = unity_check(n, n);
    if (dev > prev + 1e-14) return {"quantum.unity_monotone", false, fmt(dev)};
    prev = dev;
  }
  return {"quantum.unity_monotone", prev < 1e-12, "final " + fmt(prev)};
}

CheckResult check_compare_zero() {
  HamiltonianSpec h{GroupId::SU2, 1, {{1.0, {{0, {"Sz"}}}}}};
  const CompareResult r = compare_quantum(h, {{GroupId::SU2, {1.0, 0.5}}}, 0.01, 1e-3);
  double at0 = 0.0;
  for (size_t j = 0; j < r.classical_obs[0].size(); ++j)
    at0 = std::max(at0, std::abs(r.classical_obs[0][j] - r.quantum_obs[0][j]));
  return bounded("quantum.compare_zero_at_t0", at0, 1e-12);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite() {
  return {
      check_expm_inverse(),
      check_expm_unitary(),
      check_expm_blockdiag(),
      check_kron_mixed(),
      check_commutators(),
      check_multipoles(),
      check_oracle_norm(),
      check_closed_vs_oracle(),
      check_fast_vs_oracle(),
      check_wigner_subgroup(),
      check_overlap_props(),
      check_berry_kinetic(),
      check_expect_props(),
      check_bond_vs_kron(),
      check_report_deterministic(),
      check_energy_conservation(),
      check_omega(),
      check_orthogonality(),
      check_action(),
      check_method_report_deterministic(),
      check_propagate(),
      check_unity_monotone(),
      check_compare_zero(),
  };
}

}  // namespace sunspin
