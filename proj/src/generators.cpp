#include "sunspin/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace sunspin {

namespace {

const cplx kI(0.0, 1.0);

}  // namespace

SpinRep spin_rep(int two_s) {
  if (two_s < 1 || two_s > 4) throw std::invalid_argument("spin_rep: two_s must be in 1..4");
  SpinRep rep;
  rep.two_s = two_s;
  rep.dim = two_s + 1;
  rep.s = 0.5 * two_s;

  rep.Sz = CMatrix(rep.dim, rep.dim);
  for (int i = 0; i < rep.dim; ++i) rep.Sz(i, i) = rep.s - i;

  rep.Sp = CMatrix(rep.dim, rep.dim);
  for (int col = 1; col < rep.dim; ++col) {
    const double m = rep.s - col;  // weight of the column ket
    rep.Sp(col - 1, col) = std::sqrt(rep.s * (rep.s + 1.0) - m * (m + 1.0));
  }
  rep.Sm = rep.Sp.adjoint();
  rep.Sx = cplx(0.5, 0.0) * (rep.Sp + rep.Sm);
  rep.Sy = (cplx(1.0, 0.0) / (2.0 * kI)) * (rep.Sp - rep.Sm);
  return rep;
}

namespace {

CMatrix matpow(const CMatrix& m, int k) {
  CMatrix p = m;
  for (int i = 1; i < k; ++i) p = p * m;
  return p;
}

// prefactor * (S+^k - S-^k)
CMatrix ladder_form(const SpinRep& rep, cplx prefactor, int k) {
  return prefactor * (matpow(rep.Sp, k) - matpow(rep.Sm, k));
}

double max_dev(const CMatrix& a, const CMatrix& b) {
  CMatrix d = a;
  d -= b;
  return d.max_abs();
}

CMatrix tabulated_quadrupole(int dim) {
  CMatrix q(dim, dim);
  const cplx half_i = cplx(0.0, 0.5);
  if (dim == 3) {
    // (i/2) [[0,0,1],[0,0,0],[-1,0,0]]
    q(0, 2) = half_i;
    q(2, 0) = -half_i;
  } else if (dim == 4) {
    // (1/2i) [[0,0,1,0],[0,0,0,1],[-1,0,0,0],[0,-1,0,0]]
    q(0, 2) = -half_i;
    q(1, 3) = -half_i;
    q(2, 0) = half_i;
    q(3, 1) = half_i;
  } else {
    // (1/2i) [[0,0,1,0,0],[0,0,0,1,0],[-1,0,0,0,1],[0,-1,0,0,0],[0,0,-1,0,0]]
    q(0, 2) = -half_i;
    q(1, 3) = -half_i;
    q(2, 0) = half_i;
    q(2, 4) = -half_i;
    q(3, 1) = half_i;
    q(4, 2) = half_i;
  }
  return q;
}

CMatrix tabulated_octupole(int dim) {
  CMatrix f(dim, dim);
  if (dim == 4) {
    // (1/i) [[0,0,0,1],[0,0,0,0],[0,0,0,0],[-1,0,0,0]]
    f(0, 3) = -kI;
    f(3, 0) = kI;
  } else {
    // (1/i) [[0,0,0,1,0],[0,0,0,0,1],[0,0,0,0,0],[-1,0,0,0,0],[0,-1,0,0,0]]
    f(0, 3) = -kI;
    f(1, 4) = -kI;
    f(3, 0) = kI;
    f(4, 1) = kI;
  }
  return f;
}

CMatrix tabulated_hexadecapole() {
  CMatrix x(5, 5);
  // (1/i) with 1 at (0,4) and -1 at (4,0)
  x(0, 4) = -kI;
  x(4, 0) = kI;
  return x;
}

}  // namespace

MultipoleSet multipole_ops(const SpinRep& rep) {
  if (rep.dim < 3) throw std::invalid_argument("multipole_ops: no multipoles below dimension 3");
  MultipoleSet set;
  set.dim = rep.dim;

  set.Qxy = tabulated_quadrupole(rep.dim);
  // Rank-2 ladder prefactor: 1/(4i) for dim 3, 1/(4*sqrt(3)*i) for dims 4 and
  // 5 (no separate prefactor is tabulated for dim 5; the dim-4 one is reused).
  const cplx qpref = rep.dim == 3 ? cplx(1.0, 0.0) / (4.0 * kI)
                                  : cplx(1.0, 0.0) / (4.0 * std::sqrt(3.0) * kI);
  set.reconciliation.push_back(
      {"quadrupole", rep.dim, max_dev(set.Qxy, ladder_form(rep, qpref, 2))});

  if (rep.dim >= 4) {
    set.Oxyz = tabulated_octupole(rep.dim);
    const cplx opref = rep.dim == 4 ? cplx(1.0, 0.0) / (6.0 * kI) : cplx(1.0, 0.0) / (12.0 * kI);
    set.reconciliation.push_back(
        {"octupole", rep.dim, max_dev(*set.Oxyz, ladder_form(rep, opref, 3))});
  }
  if (rep.dim == 5) {
    set.Xxyzl = tabulated_hexadecapole();
    set.reconciliation.push_back(
        {"hexadecapole", rep.dim, max_dev(*set.Xxyzl, ladder_form(rep, cplx(1.0, 0.0) / (24.0 * kI), 4))});
  }
  return set;
}

}  // namespace sunspin
