#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sunspin/dynamics.hpp"
#include "sunspin/quantum.hpp"

using namespace sunspin;

namespace {

HamiltonianSpec sz_spec(GroupId g, double coeff = 1.0) {
  return {g, 1, {{coeff, {{0, {"Sz"}}}}}};
}

}  // namespace

TEST_CASE("hamiltonian validation") {
  CHECK_NOTHROW(validate_hamiltonian({GroupId::SU2, 1, {{-1.0, {{0, {"Sz"}}}}}}));
  CHECK_NOTHROW(validate_hamiltonian({GroupId::SU3, 1, {{1.0, {{0, {"Sz", "Sz"}}}}}}));
  // A lone raising operator is not Hermitian.
  CHECK_THROWS_AS(validate_hamiltonian({GroupId::SU2, 1, {{cplx(0.5, 0.1), {{0, {"Sp"}}}}}}),
                  std::invalid_argument);
  // Conjugate pair is fine.
  CHECK_NOTHROW(validate_hamiltonian(
      {GroupId::SU2, 1, {{cplx(0.0, 0.5), {{0, {"Sp"}}}}, {cplx(0.0, -0.5), {{0, {"Sm"}}}}}}));
  CHECK_THROWS_AS(validate_hamiltonian({GroupId::SU2, 1, {{1.0, {{1, {"Sz"}}}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_hamiltonian({GroupId::SU2, 1, {{1.0, {{0, {"Szz"}}}}}}),
                  std::invalid_argument);
}

TEST_CASE("hermiticity check for chains beyond the assembly cap") {
  // 9 spin-2 sites: full dimension 5^9 > 256, termwise adjoint check applies.
  HamiltonianSpec big{GroupId::SU5, 9, {}};
  for (int s = 0; s + 1 < 9; ++s)
    big.terms.push_back({1.0, {{s, {"Sz"}}, {s + 1, {"Sz"}}}});
  CHECK_NOTHROW(validate_hamiltonian(big));
  big.terms.push_back({cplx(0.0, 1.0), {{0, {"Sp"}}}});
  CHECK_THROWS_AS(validate_hamiltonian(big), std::invalid_argument);
}

TEST_CASE("classical energy") {
  CHECK(classical_energy(sz_spec(GroupId::SU2), {{GroupId::SU2, {1.0, 0.0}}}) ==
        doctest::Approx(0.5 * std::cos(1.0)).epsilon(1e-12));
  CHECK(classical_energy({GroupId::SU2, 1, {}}, {{GroupId::SU2, {1.0, 0.0}}}) == 0.0);

  HamiltonianSpec zz{GroupId::SU2, 2, {{1.0, {{0, {"Sz"}}, {1, {"Sz"}}}}}};
  CHECK(classical_energy(zz, {{GroupId::SU2, {0.0, 0.0}}, {GroupId::SU2, {0.0, 0.0}}}) ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("energy gradient") {
  const HamiltonianSpec h = sz_spec(GroupId::SU2);
  const std::vector<double> g = grad_energy(h, {{GroupId::SU2, {M_PI / 2, 0.3}}});
  CHECK(g[0] == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(std::abs(g[1]) < 1e-10);

  // Finite differences against the closed form over a theta grid.
  for (double theta : {0.3, 0.9, 1.7, 2.6}) {
    const std::vector<double> gt = grad_energy(h, {{GroupId::SU2, {theta, 0.1}}});
    CHECK(std::abs(gt[0] + 0.5 * std::sin(theta)) < 1e-9);
  }
}

TEST_CASE("symplectic form for SU(2)") {
  const RMatrix w = symplectic_form({GroupId::SU2, {M_PI / 2, 0.4}});
  CHECK(w.at(0, 1) == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(w.at(0, 1) + w.at(1, 0) == 0.0);  // exact antisymmetry
}

TEST_CASE("symplectic form is nondegenerate at an interior SU(3) point") {
  const RMatrix w = symplectic_form({GroupId::SU3, {1.0, 0.3, 0.2, 0.1}});
  // 4x4 Pfaffian^2 via the closed determinant of an antisymmetric matrix.
  const double pf = w.at(0, 1) * w.at(2, 3) - w.at(0, 2) * w.at(1, 3) + w.at(0, 3) * w.at(1, 2);
  CHECK(std::abs(pf * pf) > 1e-6);
}

TEST_CASE("equations of motion: Larmor precession") {
  const HamiltonianSpec h = sz_spec(GroupId::SU2);
  const std::vector<double> v =
      eom_rhs(h, {{GroupId::SU2, {M_PI / 3, 0.1}}}, EomMethod::kBerry);
  CHECK(std::abs(v[0]) < 1e-8);
  CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-9));

  // The published SU(2) equations give phi_t = -1/2 for the same field.
  const std::vector<double> vp =
      eom_rhs(h, {{GroupId::SU2, {M_PI / 3, 0.1}}}, EomMethod::kPaper);
  CHECK(vp[1] == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(std::abs(vp[0]) < 1e-8);
}

TEST_CASE("constant Hamiltonian gives zero velocity in both methods") {
  // The identity is Sz^2 + Sx^2 + Sy^2 rescaled; simplest: empty term list.
  const HamiltonianSpec h{GroupId::SU3, 1, {}};
  for (EomMethod m : {EomMethod::kBerry, EomMethod::kPaper}) {
    const std::vector<double> v = eom_rhs(h, {{GroupId::SU3, {1.0, 0.4, 0.5, 0.3}}}, m);
    for (double x : v) CHECK(std::abs(x) < 1e-8);
  }
}

TEST_CASE("singular points are refused by name") {
  const HamiltonianSpec h = sz_spec(GroupId::SU3);
  CHECK_THROWS_AS(eom_rhs(h, {{GroupId::SU3, {1.0, 0.1, 0.2, 0.0}}}, EomMethod::kPaper),
                  singular_point_error);
  CHECK_THROWS_AS(eom_rhs(h, {{GroupId::SU3, {1.0, 0.1, 0.2, 0.0}}}, EomMethod::kBerry),
                  singular_point_error);
  try {
    eom_rhs(h, {{GroupId::SU3, {1.0, 0.1, 0.2, 0.0}}}, EomMethod::kPaper);
  } catch (const singular_point_error& e) {
    CHECK(e.quantity == "sin(2g)");
  }
}

TEST_CASE("integrate: Larmor trajectory") {
  const HamiltonianSpec h = sz_spec(GroupId::SU2);
  const double theta0 = M_PI / 3, phi0 = 0.25;
  const Trajectory tr =
      integrate(h, {{GroupId::SU2, {theta0, phi0}}}, 1e-3, 2000, EomMethod::kBerry);
  REQUIRE_FALSE(tr.aborted);
  REQUIRE(tr.times.size() == 2001);
  CHECK(tr.points.back()[1] == doctest::Approx(phi0 + 2.0).epsilon(1e-9));
  CHECK(std::abs(tr.points.back()[0] - theta0) < 1e-10);

  double drift = 0.0;
  for (double e : tr.energies)
    drift = std::max(drift, std::abs(e - tr.energies[0]) / std::max(1.0, std::abs(tr.energies[0])));
  CHECK(drift < 1e-10);
}

TEST_CASE("integrate: fourth-order step error") {
  // Nonlinear field so the Runge-Kutta truncation dominates.
  HamiltonianSpec h{GroupId::SU2, 1, {{1.0, {{0, {"Sz"}}}}, {0.7, {{0, {"Sx"}}}}}};
  const std::vector<CoherentParams> p0 = {{GroupId::SU2, {1.2, 0.3}}};
  auto endpoint = [&](double dt, int steps) {
    return integrate(h, p0, dt, steps, EomMethod::kBerry).points.back();
  };
  const std::vector<double> ref = endpoint(0.0125, 160);
  const std::vector<double> a = endpoint(0.1, 20), b = endpoint(0.05, 40);
  const double ea = std::hypot(a[0] - ref[0], a[1] - ref[1]);
  const double eb = std::hypot(b[0] - ref[0], b[1] - ref[1]);
  CHECK(ea / eb > 10.0);
  CHECK(ea / eb < 26.0);
}

TEST_CASE("integrate aborts cleanly mid-run at a singular point") {
  // H = Sx precesses the spin on a great circle through both poles.
  HamiltonianSpec h{GroupId::SU2, 1, {{1.0, {{0, {"Sx"}}}}}};
  const Trajectory tr =
      integrate(h, {{GroupId::SU2, {0.3, M_PI / 2}}}, 1e-3, 4000, EomMethod::kBerry);
  CHECK(tr.aborted);
  CHECK(tr.abort_reason.find("singular") != std::string::npos);
  CHECK(tr.times.size() > 1);
  CHECK(tr.times.size() < 4001);
}

TEST_CASE("energy orthogonality of the berry field") {
  Rng rng(300);
  for (GroupId g : {GroupId::SU2, GroupId::SU3, GroupId::SU4, GroupId::SU5}) {
    HamiltonianSpec h{g, 1, {{1.0, {{0, {"Sz"}}}}, {0.4, {{0, {"Sx"}}}}}};
    for (int i = 0; i < 5; ++i) {
      const CoherentParams p = sample_interior(g, rng);
      const std::vector<double> v = eom_rhs(h, {p}, EomMethod::kBerry);
      // Richardson directional derivative of the energy along the flow.
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
      const double d = (4.0 * along(5e-4) - along(1e-3)) / 3.0;
      CHECK(std::abs(d) / std::max(1.0, speed) < 1e-9);
    }
  }
}

TEST_CASE("discrete action basics") {
  const HamiltonianSpec none{GroupId::SU2, 1, {}};
  std::vector<CoherentParams> constant(6, CoherentParams{GroupId::SU2, {0.8, 0.1}});
  CHECK(std::abs(discrete_action(constant, none, 0.05)) < 1e-14);

  // Constant path at the pole with H = Sz: each slice contributes -i eps/2.
  const HamiltonianSpec h = sz_spec(GroupId::SU2);
  std::vector<CoherentParams> pole(11, CoherentParams{GroupId::SU2, {0.0, 0.0}});
  const cplx a = discrete_action(pole, h, 0.01);
  CHECK(std::abs(a - cplx(0.0, -10 * 0.01 * 0.5)) < 1e-14);
}

TEST_CASE("discrete action converges first order to the continuum action") {
  const HamiltonianSpec h = sz_spec(GroupId::SU2);
  const double T = 1.0;
  auto path_point = [](double t) {
    return CoherentParams{GroupId::SU2, {1.0 + 0.3 * std::sin(2 * M_PI * t), 2 * M_PI * t}};
  };
  // Continuum value i Int (A.qdot - H) dt by fine quadrature.
  const int nq = 4000;
  cplx cont = 0.0;
  for (int i = 0; i < nq; ++i) {
    const double t = (i + 0.5) / nq * T;
    const CoherentParams p = path_point(t);
    const std::vector<double> a = berry_connection(p);
    const double hstep = 1e-6;
    const CoherentParams ph = path_point(t + hstep), pl = path_point(t - hstep);
    double aq = 0.0;
    for (int j = 0; j < 2; ++j) aq += a[j] * (ph.values[j] - pl.values[j]) / (2 * hstep);
    cont += cplx(0.0, 1.0) * (aq - classical_energy(h, {p})) * (T / nq);
  }
  auto disc = [&](int n) {
    std::vector<CoherentParams> path;
    for (int k = 0; k <= n; ++k) path.push_back(path_point(T * k / n));
    return discrete_action(path, h, T / n);
  };
  const double e1 = std::abs(disc(200) - cont);
  const double e2 = std::abs(disc(400) - cont);
  const double e4 = std::abs(disc(800) - cont);
  CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.1));
  CHECK(e2 / e4 == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("reduction checks") {
  const ReduceReport r43 = reduce_check(GroupId::SU4, GroupId::SU3, 25, 77);
  CHECK(r43.points == 25);
  CHECK(r43.max_dev < 1e-8);
  const ReduceReport r54 = reduce_check(GroupId::SU5, GroupId::SU4, 25, 78);
  CHECK(r54.max_dev < 1e-8);
  const ReduceReport r32 = reduce_check(GroupId::SU3, GroupId::SU2, 25, 79);
  CHECK(r32.max_dev < 1e-8);
  CHECK_THROWS_AS(reduce_check(GroupId::SU5, GroupId::SU3, 5, 1), std::invalid_argument);
}

TEST_CASE("method comparison report is deterministic and shows the SU(3) flips") {
  const std::string a = method_comparison_report(GroupId::SU3, 10, 5);
  CHECK(a == method_comparison_report(GroupId::SU3, 10, 5));
  CHECK(a.rfind("point,coordinate,berry,paper,abs_dev\n", 0) == 0);
  // For H = Sz the berry field has phi_t = 1 and the published one -1.
  CHECK(a.find(",phi,") != std::string::npos);
}
