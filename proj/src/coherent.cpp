#include "sunspin/coherent.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace sunspin {

namespace {

const cplx kI(0.0, 1.0);

cplx ei(double x) { return std::exp(kI * x); }

}  // namespace

int group_dim(GroupId g) { return 2 + static_cast<int>(g); }

int param_count(GroupId g) { return 2 * (static_cast<int>(g) + 1); }

const std::vector<std::string>& param_names(GroupId g) {
  static const std::vector<std::string> su2 = {"theta", "phi"};
  static const std::vector<std::string> su3 = {"theta", "phi", "gamma", "g"};
  static const std::vector<std::string> su4 = {"theta", "phi", "gamma", "g", "beta", "k"};
  static const std::vector<std::string> su5 = {"theta", "phi", "gamma", "g", "beta", "k", "m", "n"};
  switch (g) {
    case GroupId::SU2: return su2;
    case GroupId::SU3: return su3;
    case GroupId::SU4: return su4;
    default: return su5;
  }
}

GroupId group_from_string(const std::string& name) {
  if (name == "su2" || name == "SU2") return GroupId::SU2;
  if (name == "su3" || name == "SU3") return GroupId::SU3;
  if (name == "su4" || name == "SU4") return GroupId::SU4;
  if (name == "su5" || name == "SU5") return GroupId::SU5;
  throw std::invalid_argument("unknown group: " + name);
}

std::string group_to_string(GroupId g) {
  switch (g) {
    case GroupId::SU2: return "su2";
    case GroupId::SU3: return "su3";
    case GroupId::SU4: return "su4";
    default: return "su5";
  }
}

const GroupOps& group_ops(GroupId g) {
  static const std::array<GroupOps, 4> ops = [] {
    std::array<GroupOps, 4> a;
    for (int i = 0; i < 4; ++i) {
      a[i].rep = spin_rep(i + 1);
      if (i + 2 >= 3) {
        a[i].multipoles = multipole_ops(a[i].rep);
        a[i].has_multipoles = true;
      }
    }
    return a;
  }();
  return ops[static_cast<int>(g)];
}

void validate_params(const CoherentParams& p) {
  if (static_cast<int>(p.values.size()) != param_count(p.group))
    throw std::invalid_argument("parameter count does not match group");
  for (double v : p.values)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite parameter value");
}

CoherentState build_oracle(const CoherentParams& p) {
  validate_params(p);
  const GroupOps& ops = group_ops(p.group);
  const int d = group_dim(p.group);
  CVector v = CVector::basis(d, 0);

  // Factors applied right to left, exactly in the published order.
  auto apply = [&v](const CMatrix& gen, cplx coeff) { v = expm(coeff * gen) * v; };
  const std::vector<double>& q = p.values;
  switch (p.group) {
    case GroupId::SU2:
      apply(ops.rep.Sy, -kI * q[0]);  // theta
      apply(ops.rep.Sz, -kI * q[1]);  // phi
      break;
    case GroupId::SU3:
      apply(ops.multipoles.Qxy, 2.0 * kI * q[3]);  // g
      apply(ops.rep.Sz, -kI * q[2]);               // gamma
      apply(ops.rep.Sy, -kI * q[0]);
      apply(ops.rep.Sz, -kI * q[1]);
      break;
    case GroupId::SU4:
      apply(*ops.multipoles.Oxyz, -kI * q[5]);     // k
      apply(ops.rep.Sz, -kI * q[4]);               // beta
      apply(ops.multipoles.Qxy, 2.0 * kI * q[3]);  // g
      apply(ops.rep.Sz, -kI * q[2]);
      apply(ops.rep.Sy, -kI * q[0]);
      apply(ops.rep.Sz, -kI * q[1]);
      break;
    case GroupId::SU5:
      apply(*ops.multipoles.Xxyzl, -kI * q[7]);    // n
      apply(ops.rep.Sz, -kI * q[6]);               // m
      apply(*ops.multipoles.Oxyz, -kI * q[5]);     // k
      apply(ops.rep.Sz, -kI * q[4]);               // beta
      apply(ops.multipoles.Qxy, 2.0 * kI * q[3]);  // g
      apply(ops.rep.Sz, -kI * q[2]);
      apply(ops.rep.Sy, -kI * q[0]);
      apply(ops.rep.Sz, -kI * q[1]);
      break;
  }
  return {p.group, v};
}

void hermitian_eigen(const CMatrix& a_in, CMatrix& v, std::vector<double>& e) {
  const int n = a_in.rows();
  CMatrix a = a_in;
  v = CMatrix::identity(n);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off < 1e-15) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx g = a(p, q);
        if (std::abs(g) < 1e-18) continue;
        const double alpha = a(p, p).real(), beta = a(q, q).real();
        const cplx phase = g / std::abs(g);
        const double tau = (beta - alpha) / (2.0 * std::abs(g));
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Columns p,q of A and V rotate by J; rows of A by J+.
        for (int r = 0; r < n; ++r) {
          const cplx arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * std::conj(phase) * arq;
          a(r, q) = s * phase * arp + c * arq;
          const cplx vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * std::conj(phase) * vrq;
          v(r, q) = s * phase * vrp + c * vrq;
        }
        for (int col = 0; col < n; ++col) {
          const cplx apc = a(p, col), aqc = a(q, col);
          a(p, col) = c * apc - s * phase * aqc;
          a(q, col) = s * std::conj(phase) * apc + c * aqc;
        }
      }
    }
  }
  e.resize(n);
  for (int i = 0; i < n; ++i) e[i] = a(i, i).real();
}

namespace {

// One right-to-left factor of the coherent-state product, exp(i x G) with
// the scalar x supplied per call. Diagonal G keeps its weights; the rest
// carry a precomputed eigendecomposition.
struct FastFactor {
  int param = 0;        // index into the parameter vector
  double scale = 0.0;   // x = scale * parameter value
  bool diagonal = false;
  std::vector<double> eig;  // weights (diagonal) or eigenvalues
  CMatrix v;                // eigenvectors when not diagonal
};

std::vector<FastFactor> make_fast_factors(GroupId group) {
  const GroupOps& ops = group_ops(group);
  const int d = group_dim(group);
  std::vector<double> weights(d);
  for (int i = 0; i < d; ++i) weights[i] = ops.rep.Sz(i, i).real();

  auto diag = [&](int param, double scale) {
    FastFactor f;
    f.param = param;
    f.scale = scale;
    f.diagonal = true;
    f.eig = weights;
    return f;
  };
  auto dense = [&](int param, double scale, const CMatrix& gen) {
    FastFactor f;
    f.param = param;
    f.scale = scale;
    hermitian_eigen(gen, f.v, f.eig);
    return f;
  };

  // Rightmost factor first (applied to the reference state first).
  std::vector<FastFactor> fs;
  switch (group) {
    case GroupId::SU2:
      fs.push_back(dense(0, -1.0, ops.rep.Sy));
      fs.push_back(diag(1, -1.0));
      break;
    case GroupId::SU3:
      fs.push_back(dense(3, 2.0, ops.multipoles.Qxy));
      fs.push_back(diag(2, -1.0));
      fs.push_back(dense(0, -1.0, ops.rep.Sy));
      fs.push_back(diag(1, -1.0));
      break;
    case GroupId::SU4:
      fs.push_back(dense(5, -1.0, *ops.multipoles.Oxyz));
      fs.push_back(diag(4, -1.0));
      fs.push_back(dense(3, 2.0, ops.multipoles.Qxy));
      fs.push_back(diag(2, -1.0));
      fs.push_back(dense(0, -1.0, ops.rep.Sy));
      fs.push_back(diag(1, -1.0));
      break;
    case GroupId::SU5:
      fs.push_back(dense(7, -1.0, *ops.multipoles.Xxyzl));
      fs.push_back(diag(6, -1.0));
      fs.push_back(dense(5, -1.0, *ops.multipoles.Oxyz));
      fs.push_back(diag(4, -1.0));
      fs.push_back(dense(3, 2.0, ops.multipoles.Qxy));
      fs.push_back(diag(2, -1.0));
      fs.push_back(dense(0, -1.0, ops.rep.Sy));
      fs.push_back(diag(1, -1.0));
      break;
  }
  return fs;
}

const std::vector<FastFactor>& fast_factors(GroupId group) {
  static const std::array<std::vector<FastFactor>, 4> cache = {
      make_fast_factors(GroupId::SU2), make_fast_factors(GroupId::SU3),
      make_fast_factors(GroupId::SU4), make_fast_factors(GroupId::SU5)};
  return cache[static_cast<int>(group)];
}

}  // namespace

CoherentState build_fast(const CoherentParams& p) {
  validate_params(p);
  const int d = group_dim(p.group);
  CVector v = CVector::basis(d, 0);
  CVector scratch(d);
  for (const FastFactor& f : fast_factors(p.group)) {
    const double x = f.scale * p.values[f.param];
    if (f.diagonal) {
      for (int i = 0; i < d; ++i) v[i] *= std::exp(kI * (x * f.eig[i]));
      continue;
    }
    for (int i = 0; i < d; ++i) {
      cplx s = 0.0;
      for (int r = 0; r < d; ++r) s += std::conj(f.v(r, i)) * v[r];
      scratch[i] = s * std::exp(kI * (x * f.eig[i]));
    }
    for (int r = 0; r < d; ++r) {
      cplx s = 0.0;
      for (int i = 0; i < d; ++i) s += f.v(r, i) * scratch[i];
      v[r] = s;
    }
  }
  return {p.group, v};
}

namespace {

CVector closed_su2(double theta, double phi) {
  CVector c(2);
  c[0] = std::cos(theta / 2) * ei(-phi / 2);
  c[1] = std::sin(theta / 2) * ei(phi / 2);
  return c;
}

// The published SU(3) coefficient list reads bottom-up against the operator
// product (its C0 would not reduce to the reference state at zero
// parameters), so the amplitudes are assigned in reversed order here. The
// compatibility report carries the assumption note.
CVector closed_su3(double theta, double phi, double gamma, double g) {
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  const double s2 = std::sin(theta / 2) * std::sin(theta / 2);
  const cplx em = ei(-gamma) * std::cos(g);
  const cplx ep = ei(gamma) * std::sin(g);
  CVector c(3);
  c[0] = ei(-phi) * (c2 * em + s2 * ep);
  c[1] = (std::sin(theta) / std::sqrt(2.0)) * (em - ep);
  c[2] = ei(phi) * (s2 * em + c2 * ep);
  return c;
}

CVector closed_su4(double theta, double phi, double gamma, double g, double beta, double k) {
  const double s = std::sin(theta / 2), c = std::cos(theta / 2);
  const double r3 = std::sqrt(3.0);
  const double a1 = s * s * s * std::cos(g);
  const double a2 = r3 * s * c * c * std::sin(g);
  const double a3 = r3 * s * s * c * std::cos(g);
  const double a4 = std::cos(theta) * (1.0 - s * s) * std::sin(g);
  const double b1 = r3 * s * s * c * std::sin(g);
  const double b2 = c * c * c * std::cos(g);
  const double b3 = std::sin(theta) * (2.0 - 3.0 * s * s) * std::sin(g);
  const double b4 = r3 * s * c * c * std::cos(g);

  const double sk = std::sin(k), ck = std::cos(k);
  const double A1 = a1 * sk, A2 = a2 * sk, A3 = a3 * sk, A4 = a4 * sk;
  const double B1 = b1 * ck, B2 = b2 * ck, B3 = b3 * ck, B4 = b4 * ck;
  const double Ap1 = a1 * ck, Ap2 = a2 * ck, Ap4 = a4 * ck;
  const double Bp1 = b1 * sk, Bp2 = b2 * sk, Bp4 = b4 * sk;

  CVector v(4);
  v[0] = A1 * ei(1.5 * (phi - gamma - beta)) - A2 * ei(0.5 * (3 * phi + gamma - 3 * beta)) +
         B1 * ei(0.5 * (3 * phi - gamma + 3 * beta)) + B2 * ei(1.5 * (phi + gamma + beta));
  v[1] = A3 * ei(1.5 * (phi - gamma + beta)) - A4 * ei(0.5 * (phi + gamma - 3 * beta)) +
         B3 * ei(0.5 * (phi - gamma + 3 * beta)) - B4 * ei(0.5 * (phi + 3 * gamma + 3 * beta));
  v[2] = Bp4 * ei(-0.5 * (phi + 3 * gamma + 3 * beta)) + Bp4 * ei(0.5 * (phi - gamma + 3 * beta)) +
         Ap4 * ei(-0.5 * (phi + gamma - 3 * beta)) - Ap2 * ei(-0.5 * (phi - 3 * gamma - 3 * beta));
  v[3] = Bp1 * ei(-1.5 * (phi + gamma + beta)) - Bp2 * ei(-0.5 * (3 * phi - gamma + 3 * beta)) -
         Ap1 * ei(-1.5 * (phi - gamma - beta)) + Ap2 * ei(-0.5 * (3 * phi + gamma - 3 * beta));
  return v;
}

// Degree-10 truncated series for the dimension-5 rotation entries.
struct Series5 {
  double f1, f2, f3, f4, f5, f6, f7, f8, f9, f10;
};

Series5 series5(double t) {
  const double t2 = t * t, t3 = t2 * t, t4 = t2 * t2, t5 = t4 * t, t6 = t4 * t2, t7 = t6 * t,
               t8 = t4 * t4, t9 = t8 * t, t10 = t8 * t2;
  const double r32 = std::sqrt(1.5), r23 = std::sqrt(2.0 / 3.0), r6 = std::sqrt(6.0);
  Series5 f;
  f.f1 = 1 - t2 / 2 + 5 * t4 / 48 - 17 * t6 / 1440 + 13 * t8 / 16128 - 257 * t10 / 7257600;
  f.f2 = -t + 5 * t3 / 12 - 17 * t5 / 240 + 13 * t7 / 2016 - 257 * t9 / 725760;
  f.f3 = 0.5 * r32 * t2 - t4 / (2 * r6) + t6 / (15 * r6) - t8 / (210 * r6) + t10 / (4725 * r6);
  f.f4 = -t3 / 4 + t5 / 16 - t7 / 160 + 17 * t9 / 48384;
  f.f5 = t4 / 16 - t6 / 96 + t8 / 1280 - 17 * t10 / 483840;
  f.f6 = t - 5 * t3 / 12 + 17 * t5 / 240 - 13 * t7 / 2016 + 257 * t9 / 725760;
  f.f7 = 1 - 5 * t2 / 4 + 17 * t4 / 48 - 13 * t6 / 288 + 257 * t8 / 80640 - 41 * t10 / 290304;
  f.f8 = -r32 * t + r23 * t3 - r23 * t5 / 5 + 2 * r23 * t7 / 105 - r23 * t9 / 945;
  f.f9 = 3 * t2 / 4 - 5 * t4 / 16 + 7 * t6 / 160 - 17 * t8 / 5376 + 341 * t10 / 2419200;
  f.f10 = 1 - 3 * t2 / 2 + t4 / 2 - t6 / 15 + t8 / 210 - t10 / 4725;
  return f;
}

CVector closed_su5(double theta, double phi, double gamma, double g, double beta, double k,
                   double m, double n) {
  const Series5 f = series5(theta);
  const double A = 0.5 * (1.0 + std::cos(std::sqrt(2.0) * g));
  const double B = 0.5 * (1.0 - std::cos(std::sqrt(2.0) * g));
  const double C = std::sin(std::sqrt(2.0) * g) / std::sqrt(2.0);
  const double cg = std::cos(g), sg = std::sin(g);
  const double sk = std::sin(k), ck = std::cos(k);
  const cplx outer = -ei(2.0 * (beta + m)) * std::sin(n);
  const cplx inner = std::cos(n) * ei(-2.0 * m);
  const cplx eb = ei(beta), ebb = ei(-2.0 * beta);

  CVector v(5);
  v[0] = outer * (A * ei(2 * (phi - gamma)) * f.f5 + B * ei(2 * (phi + gamma)) * f.f1 +
                  C * ei(2 * phi) * f.f3) +
         inner * (eb * (cg * ei(2 * phi - gamma) * f.f4 + sg * ei(2 * phi + gamma) * f.f2) * sk +
                  ebb * (B * ei(2 * (phi - gamma)) * f.f5 + A * ei(2 * (phi + gamma)) * f.f1 -
                         C * ei(2 * phi) * f.f3) * ck);
  v[1] = outer * (A * ei(phi - 2 * gamma) * f.f4 + B * ei(phi + 2 * gamma) * f.f6 +
                  C * ei(phi) * f.f8) +
         inner * (eb * (cg * ei(phi - gamma) * f.f9 + sg * ei(phi + gamma) * f.f7) * sk +
                  ebb * (B * ei(phi - 2 * gamma) * f.f4 + A * ei(phi + 2 * gamma) * f.f6 -
                         C * ei(phi) * f.f8) * ck);
  v[2] = outer * (A * ei(-2 * gamma) * f.f3 + B * ei(2 * gamma) * f.f3 + C * f.f10) +
         inner * (eb * (cg * ei(-gamma) * f.f8 - sg * ei(gamma) * f.f8) * sk +
                  ebb * (B * ei(-2 * gamma) * f.f3 + A * ei(2 * gamma) * f.f3 - C * f.f10) * ck);
  v[3] = -outer * (A * ei(-(phi + 2 * gamma)) * f.f6 + B * ei(-phi + 2 * gamma) * f.f4 +
                   C * ei(-phi) * f.f8) +
         inner * (eb * (cg * ei(-(phi + gamma)) * f.f7 + sg * ei(-phi + gamma) * f.f9) * sk -
                  ebb * (B * ei(-(phi + 2 * gamma)) * f.f6 + A * ei(-phi + 2 * gamma) * f.f4 -
                         C * ei(-phi) * f.f8) * ck);
  // The C4 row's bare "f" is read as f3, mirroring the C0 row.
  v[4] = outer * (A * ei(-2 * (phi + gamma)) * f.f1 + B * ei(2 * (-phi + gamma)) * f.f5 +
                  C * ei(-2 * phi) * f.f3) +
         inner * (eb * (-cg * ei(-(2 * phi + gamma)) * f.f2 - sg * ei(-2 * phi + gamma) * f.f4) * sk +
                  ebb * (B * ei(-2 * (phi + gamma)) * f.f1 + A * ei(2 * (-phi + gamma)) * f.f5 -
                         C * ei(-2 * phi) * f.f3) * ck);
  return v;
}

}  // namespace

ClosedFormResult build_closed_form(const CoherentParams& p) {
  validate_params(p);
  const std::vector<double>& q = p.values;
  CVector v;
  switch (p.group) {
    case GroupId::SU2: v = closed_su2(q[0], q[1]); break;
    case GroupId::SU3: v = closed_su3(q[0], q[1], q[2], q[3]); break;
    case GroupId::SU4: v = closed_su4(q[0], q[1], q[2], q[3], q[4], q[5]); break;
    case GroupId::SU5: v = closed_su5(q[0], q[1], q[2], q[3], q[4], q[5], q[6], q[7]); break;
  }
  ClosedFormResult out;
  out.norm_defect = std::abs(v.norm() - 1.0);
  if (out.norm_defect > 1e-9) {
    v *= cplx(1.0 / v.norm(), 0.0);
    out.normalized = true;
  }
  out.state = {p.group, v};
  return out;
}

namespace {

CMatrix wigner_dim2(double t) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  CMatrix d(2, 2);
  d(0, 0) = c; d(0, 1) = -s;
  d(1, 0) = s; d(1, 1) = c;
  return d;
}

CMatrix wigner_dim3(double t) {
  const double c2 = std::cos(t / 2) * std::cos(t / 2);
  const double s2 = std::sin(t / 2) * std::sin(t / 2);
  const double sq = std::sin(t) / std::sqrt(2.0);
  CMatrix d(3, 3);
  d(0, 0) = c2;  d(0, 1) = -sq;        d(0, 2) = s2;
  d(1, 0) = sq;  d(1, 1) = std::cos(t); d(1, 2) = -sq;
  d(2, 0) = s2;  d(2, 1) = sq;         d(2, 2) = c2;
  return d;
}

CMatrix wigner_dim4(double t) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  const double r3 = std::sqrt(3.0);
  const double f1 = c * c * c;
  const double f2 = s * s * s;
  const double f3 = r3 * c * c * s;
  const double f4 = r3 * c * s * s;
  const double f5 = c * (1.0 - 3.0 * s * s);
  const double f6 = s * (2.0 - 3.0 * s * s);
  CMatrix d(4, 4);
  d(0, 0) = f1;  d(0, 1) = -f3; d(0, 2) = f4;  d(0, 3) = -f2;
  d(1, 0) = f3;  d(1, 1) = f5;  d(1, 2) = -f6; d(1, 3) = f4;
  d(2, 0) = f4;  d(2, 1) = f6;  d(2, 2) = f5;  d(2, 3) = -f3;
  d(3, 0) = f2;  d(3, 1) = f4;  d(3, 2) = f3;  d(3, 3) = f1;
  return d;
}

}  // namespace

CMatrix wigner_d(const SpinRep& rep, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("wigner_d: non-finite angle");
  switch (rep.dim) {
    case 2: return wigner_dim2(theta);
    case 3: return wigner_dim3(theta);
    case 4: return wigner_dim4(theta);
    default: return expm(-kI * theta * rep.Sy);
  }
}

CMatrix wigner_d_series(double theta) {
  const Series5 f = series5(theta);
  CMatrix d(5, 5);
  d(0, 0) = f.f1;  d(0, 1) = f.f2;  d(0, 2) = f.f3;   d(0, 3) = f.f4;  d(0, 4) = f.f5;
  d(1, 0) = f.f6;  d(1, 1) = f.f7;  d(1, 2) = f.f8;   d(1, 3) = f.f9;  d(1, 4) = f.f4;
  d(2, 0) = f.f3;  d(2, 1) = -f.f8; d(2, 2) = f.f10;  d(2, 3) = f.f8;  d(2, 4) = f.f3;
  d(3, 0) = -f.f4; d(3, 1) = f.f9;  d(3, 2) = -f.f8;  d(3, 3) = f.f7;  d(3, 4) = -f.f6;
  d(4, 0) = f.f5;  d(4, 1) = -f.f4; d(4, 2) = f.f3;   d(4, 3) = -f.f2; d(4, 4) = f.f1;
  return d;
}

cplx overlap(const CoherentParams& p1, const CoherentParams& p2) {
  if (p1.group != p2.group) throw std::invalid_argument("overlap: group mismatch");
  return dot(build_oracle(p1).amplitudes, build_oracle(p2).amplitudes);
}

StateDerivatives state_derivatives(const CoherentParams& p, double step) {
  validate_params(p);
  StateDerivatives out;
  out.psi = build_oracle(p).amplitudes;
  const int n = param_count(p.group);
  out.dpsi.reserve(n);
  for (int a = 0; a < n; ++a) {
    CoherentParams hi = p, lo = p;
    hi.values[a] += step;
    lo.values[a] -= step;
    CVector d = build_oracle(hi).amplitudes - build_oracle(lo).amplitudes;
    d *= cplx(1.0 / (2.0 * step), 0.0);
    out.dpsi.push_back(std::move(d));
  }
  return out;
}

std::vector<double> berry_connection(const CoherentParams& p) {
  const StateDerivatives sd = state_derivatives(p, 1e-6);
  std::vector<double> a;
  a.reserve(sd.dpsi.size());
  for (const CVector& d : sd.dpsi) a.push_back((kI * dot(sd.psi, d)).real());
  return a;
}

CoherentParams sample_params(GroupId g, Rng& rng) {
  const std::vector<std::string>& names = param_names(g);
  CoherentParams p;
  p.group = g;
  for (const std::string& name : names) {
    if (name == "theta")
      p.values.push_back(rng.uniform(0.1, M_PI - 0.1));
    else if (name == "g" || name == "k" || name == "n")
      p.values.push_back(rng.uniform(-1.0, 1.0));
    else
      p.values.push_back(rng.uniform(0.0, 2.0 * M_PI));
  }
  return p;
}

namespace {

std::vector<double> denominators(const CoherentParams& p) {
  const std::vector<double>& q = p.values;
  std::vector<double> d = {std::sin(q[0])};
  auto push_pair = [&d](double x) {
    d.push_back(std::cos(x));
    d.push_back(std::sin(x));
    d.push_back(std::cos(2 * x));
    d.push_back(std::sin(2 * x));
  };
  if (p.group == GroupId::SU3) {
    d.push_back(std::cos(2 * q[3]));
    d.push_back(std::sin(2 * q[3]));
  } else if (p.group == GroupId::SU4) {
    push_pair(q[3]);  // g
    push_pair(q[5]);  // k
  } else if (p.group == GroupId::SU5) {
    push_pair(q[3]);  // g
    push_pair(q[5]);  // k
    push_pair(q[7]);  // n
  }
  return d;
}

}  // namespace

double min_denominator(const CoherentParams& p) {
  double lo = 1e300;
  for (double v : denominators(p)) lo = std::min(lo, std::abs(v));
  return lo;
}

CoherentParams sample_interior(GroupId g, Rng& rng, double margin) {
  for (int tries = 0; tries < 10000; ++tries) {
    CoherentParams p = sample_params(g, rng);
    if (min_denominator(p) > margin) return p;
  }
  throw std::runtime_error("sample_interior: rejection sampling failed");
}

}  // namespace sunspin
