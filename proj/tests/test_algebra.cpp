#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sunspin/algebra.hpp"
#include "sunspin/generators.hpp"
#include "sunspin/rng.hpp"

using namespace sunspin;

namespace {

CMatrix random_matrix(Rng& rng, int n, double scale) {
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = cplx(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
  return m;
}

CMatrix random_antihermitian(Rng& rng, int n, double scale) {
  CMatrix m = random_matrix(rng, n, scale);
  return cplx(0.5, 0.0) * (m - m.adjoint());
}

}  // namespace

TEST_CASE("expm of the zero matrix is the identity") {
  CMatrix z(3, 3);
  CHECK((expm(z) - CMatrix::identity(3)).max_abs() == 0.0);
}

TEST_CASE("pi rotation about y swaps the poles for spin 1/2") {
  const SpinRep rep = spin_rep(1);
  const CMatrix u = expm(cplx(0.0, -M_PI) * rep.Sy);
  CVector v = u * CVector::basis(2, 0);
  CHECK(std::abs(v[0]) < 1e-14);
  CHECK(std::abs(v[1] - cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("expm of anti-Hermitian matrices is unitary") {
  Rng rng(1);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CMatrix u = expm(random_antihermitian(rng, 5, 2.0));
    worst = std::max(worst, (u.adjoint() * u - CMatrix::identity(5)).max_abs());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("expm(A) expm(-A) is the identity up to 1e-12 for norm <= 10") {
  // Unit-box entries keep ||A|| within the bound of 10; the residual of the
  // product itself floors at e^(2 alpha) * eps, which passes 1e-12 only for
  // moderate spectral abscissa alpha.
  Rng rng(2);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const CMatrix a = random_matrix(rng, 5, 1.0);
    worst = std::max(worst, (expm(a) * expm(cplx(-1, 0) * a) - CMatrix::identity(5)).max_abs());
  }
  CHECK(worst < 1e-12);

  // Anti-Hermitian input at the norm boundary: unitary result, no floor.
  for (int i = 0; i < 20; ++i) {
    CMatrix a = random_antihermitian(rng, 5, 1.0);
    double nrm = 0.0;
    for (int r = 0; r < 5; ++r) {
      double row = 0.0;
      for (int c = 0; c < 5; ++c) row += std::abs(a(r, c));
      nrm = std::max(nrm, row);
    }
    a *= cplx(10.0 / nrm, 0.0);
    CHECK((expm(a) * expm(cplx(-1, 0) * a) - CMatrix::identity(5)).max_abs() < 1e-12);
  }
}

TEST_CASE("expm respects block-diagonal structure") {
  Rng rng(3);
  const CMatrix a = random_matrix(rng, 2, 1.0), b = random_matrix(rng, 5, 1.0);
  CMatrix block(7, 7);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) block(r, c) = a(r, c);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) block(2 + r, 2 + c) = b(r, c);
  const CMatrix eb = expm(block), ea = expm(a), eb2 = expm(b);
  double dev = 0.0;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) {
      cplx want = 0.0;
      if (r < 2 && c < 2) want = ea(r, c);
      if (r >= 2 && c >= 2) want = eb2(r - 2, c - 2);
      dev = std::max(dev, std::abs(eb(r, c) - want));
    }
  CHECK(dev < 1e-12);
}

TEST_CASE("expm rejects bad input") {
  CHECK_THROWS_AS(expm(CMatrix(2, 3)), std::invalid_argument);
  CMatrix nan(2, 2);
  nan(0, 0) = cplx(std::nan(""), 0.0);
  CHECK_THROWS_AS(expm(nan), std::invalid_argument);
}

TEST_CASE("commutator identities") {
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const SpinRep r = spin_rep(two_s);
    CHECK((commutator(r.Sz, r.Sp) - r.Sp).max_abs() < 1e-12);
    CHECK((commutator(r.Sp, r.Sm) - cplx(2, 0) * r.Sz).max_abs() < 1e-12);
    CHECK(commutator(r.Sx, r.Sx).max_abs() == 0.0);
  }
  CHECK_THROWS_AS(commutator(CMatrix(2, 2), CMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("kron basics and the 256 cap") {
  CHECK((kron(CMatrix::identity(2), CMatrix::identity(2)) - CMatrix::identity(4)).max_abs() ==
        0.0);

  const SpinRep r = spin_rep(1);
  const CMatrix a = kron(r.Sz, CMatrix::identity(2));
  const CMatrix b = kron(CMatrix::identity(2), r.Sz);
  CHECK(commutator(a, b).max_abs() < 1e-15);

  const CMatrix five = CMatrix::identity(5);
  CHECK(kron(kron(five, five), five).rows() == 125);
  const CMatrix big = CMatrix::identity(125);
  CHECK_THROWS_AS(kron(big, CMatrix::identity(5)), std::invalid_argument);
}

TEST_CASE("kron mixed-product property") {
  Rng rng(4);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const CMatrix a = random_matrix(rng, 3, 1.0), c = random_matrix(rng, 3, 1.0);
    const CMatrix b = random_matrix(rng, 4, 1.0), d = random_matrix(rng, 4, 1.0);
    worst = std::max(worst, (kron(a, b) * kron(c, d) - kron(a * c, b * d)).max_abs());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("predicates") {
  const SpinRep r = spin_rep(2);
  CHECK(r.Sx.is_hermitian());
  CHECK((cplx(0, 1) * r.Sy).is_antihermitian());
  CHECK(expm(cplx(0, 1) * r.Sx).is_unitary());
  CHECK_FALSE(r.Sp.is_hermitian());
}
