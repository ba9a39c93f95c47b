#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sunspin/generators.hpp"

using namespace sunspin;

TEST_CASE("spin 1/2 weight basis") {
  const SpinRep r = spin_rep(1);
  CHECK(r.dim == 2);
  CHECK(r.Sz(0, 0) == cplx(0.5, 0.0));
  CHECK(r.Sz(1, 1) == cplx(-0.5, 0.0));
  CHECK(r.Sp(0, 1) == cplx(1.0, 0.0));
}

TEST_CASE("spin 1 ladder coefficients") {
  const SpinRep r = spin_rep(2);
  CHECK(std::abs(r.Sp(0, 1) - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(r.Sp(1, 2) - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("Casimir for every spin") {
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const SpinRep r = spin_rep(two_s);
    CMatrix c = r.Sx * r.Sx + r.Sy * r.Sy + r.Sz * r.Sz;
    c -= cplx(r.s * (r.s + 1.0), 0.0) * CMatrix::identity(r.dim);
    CHECK(c.max_abs() < 1e-12);
  }
  const SpinRep s2 = spin_rep(4);
  CMatrix c = s2.Sx * s2.Sx + s2.Sy * s2.Sy + s2.Sz * s2.Sz;
  CHECK(std::abs(c(0, 0) - cplx(6.0, 0.0)) < 1e-12);  // s(s+1) = 6 for s = 2
}

TEST_CASE("spin_rep rejects out-of-range spins") {
  CHECK_THROWS_AS(spin_rep(0), std::invalid_argument);
  CHECK_THROWS_AS(spin_rep(5), std::invalid_argument);
}

TEST_CASE("tabulated quadrupole entries, dim 3") {
  const MultipoleSet m = multipole_ops(spin_rep(2));
  CHECK(m.Qxy(0, 2) == cplx(0.0, 0.5));
  CHECK(m.Qxy(2, 0) == cplx(0.0, -0.5));
  double rest = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!((r == 0 && c == 2) || (r == 2 && c == 0))) rest += std::abs(m.Qxy(r, c));
  CHECK(rest == 0.0);
}

TEST_CASE("tabulated octupole entries, dim 4") {
  const MultipoleSet m = multipole_ops(spin_rep(3));
  REQUIRE(m.Oxyz.has_value());
  CHECK((*m.Oxyz)(0, 3) == cplx(0.0, -1.0));
  CHECK((*m.Oxyz)(3, 0) == cplx(0.0, 1.0));
}

TEST_CASE("tabulated hexadecapole entries, dim 5") {
  const MultipoleSet m = multipole_ops(spin_rep(4));
  REQUIRE(m.Xxyzl.has_value());
  CHECK((*m.Xxyzl)(0, 4) == cplx(0.0, -1.0));
  CHECK((*m.Xxyzl)(4, 0) == cplx(0.0, 1.0));
}

TEST_CASE("multipoles are Hermitian and traceless") {
  for (int two_s = 2; two_s <= 4; ++two_s) {
    const MultipoleSet m = multipole_ops(spin_rep(two_s));
    CHECK(m.Qxy.is_hermitian(1e-12));
    CHECK(std::abs(m.Qxy.trace()) < 1e-12);
    if (m.Oxyz) {
      CHECK(m.Oxyz->is_hermitian(1e-12));
      CHECK(std::abs(m.Oxyz->trace()) < 1e-12);
    }
    if (m.Xxyzl) {
      CHECK(m.Xxyzl->is_hermitian(1e-12));
      CHECK(std::abs(m.Xxyzl->trace()) < 1e-12);
    }
  }
}

TEST_CASE("reconciliation table: dim-3 ladder form flips the sign") {
  const MultipoleSet m = multipole_ops(spin_rep(2));
  REQUIRE(m.reconciliation.size() == 1);
  CHECK(m.reconciliation[0].op == "quadrupole");
  // tabulated (0,2) entry is +i/2, ladder form gives -i/2: deviation 1.
  CHECK(m.reconciliation[0].max_abs_dev == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reconciliation table: dim-4 forms agree exactly") {
  const MultipoleSet m = multipole_ops(spin_rep(3));
  for (const ReconciliationEntry& e : m.reconciliation)
    CHECK(e.max_abs_dev < 1e-14);  // quadrupole and octupole both match
}

TEST_CASE("reconciliation table: dim-5 quadrupole deviates, higher ranks match") {
  const MultipoleSet m = multipole_ops(spin_rep(4));
  REQUIRE(m.reconciliation.size() == 3);
  CHECK(m.reconciliation[0].max_abs_dev > 0.1);   // quadrupole
  CHECK(m.reconciliation[1].max_abs_dev < 1e-14); // octupole
  CHECK(m.reconciliation[2].max_abs_dev < 1e-14); // hexadecapole
}

TEST_CASE("reconciliation table is deterministic") {
  for (int two_s = 2; two_s <= 4; ++two_s) {
    const MultipoleSet a = multipole_ops(spin_rep(two_s));
    const MultipoleSet b = multipole_ops(spin_rep(two_s));
    REQUIRE(a.reconciliation.size() == b.reconciliation.size());
    for (size_t i = 0; i < a.reconciliation.size(); ++i)
      CHECK(a.reconciliation[i].max_abs_dev == b.reconciliation[i].max_abs_dev);
  }
}

TEST_CASE("no multipoles below dimension 3") {
  CHECK_THROWS_AS(multipole_ops(spin_rep(1)), std::invalid_argument);
}
