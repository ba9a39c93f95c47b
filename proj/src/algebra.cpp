#include "sunspin/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace sunspin {

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("CMatrix: dimensions must be positive");
  a_.assign(static_cast<size_t>(rows) * cols, cplx(0.0, 0.0));
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

cplx CMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace: matrix not square");
  cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::all_finite() const {
  for (const cplx& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool CMatrix::is_hermitian(double tol) const {
  if (!square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool CMatrix::is_antihermitian(double tol) const {
  if (!square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) + std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool CMatrix::is_unitary(double tol) const {
  if (!square()) return false;
  CMatrix p = adjoint() * (*this);
  p -= identity(rows_);
  return p.max_abs() <= tol;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx z) {
  for (cplx& v : a_) v *= z;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix mul: shape mismatch");
  CMatrix m(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const cplx ark = a(r, k);
      if (ark == cplx(0.0, 0.0)) continue;
      for (int c = 0; c < b.cols(); ++c) m(r, c) += ark * b(k, c);
    }
  }
  return m;
}

CMatrix operator*(cplx z, CMatrix m) { return m *= z; }

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw std::invalid_argument("commutator: need square matrices of equal dimension");
  return a * b - b * a;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const long rows = static_cast<long>(a.rows()) * b.rows();
  const long cols = static_cast<long>(a.cols()) * b.cols();
  if (rows > kMaxDim || cols > kMaxDim)
    throw std::invalid_argument("kron: result exceeds the 256-dimensional cap");
  CMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const cplx z = a(ar, ac);
      if (z == cplx(0.0, 0.0)) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          m(ar * b.rows() + br, ac * b.cols() + bc) = z * b(br, bc);
    }
  return m;
}

namespace {

bool is_diagonal(const CMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (r != c && m(r, c) != cplx(0.0, 0.0)) return false;
  return true;
}

}  // namespace

CMatrix expm(const CMatrix& m) {
  if (!m.square()) throw std::invalid_argument("expm: matrix not square");
  if (m.rows() > kMaxDim) throw std::invalid_argument("expm: dimension above 256");
  if (!m.all_finite()) throw std::invalid_argument("expm: non-finite entries");

  const int n = m.rows();
  if (is_diagonal(m)) {
    CMatrix e(n, n);
    for (int i = 0; i < n; ++i) e(i, i) = std::exp(m(i, i));
    return e;
  }

  // Scale so the series converges in a couple dozen terms, then square back.
  int squarings = 0;
  double nrm = m.max_abs() * n;
  while (nrm > 0.5 && squarings < 60) {
    nrm *= 0.5;
    ++squarings;
  }
  CMatrix x = (cplx(std::ldexp(1.0, -squarings), 0.0)) * m;

  CMatrix sum = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = term * x;
    term *= cplx(1.0 / k, 0.0);
    sum += term;
    if (term.max_abs() < 1e-18 * std::max(1.0, sum.max_abs())) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

CVector CVector::basis(int dim, int k) {
  CVector v(dim);
  v[k] = 1.0;
  return v;
}

double CVector::norm() const {
  double s = 0.0;
  for (const cplx& z : v_) s += std::norm(z);
  return std::sqrt(s);
}

bool CVector::all_finite() const {
  for (const cplx& z : v_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

CVector& CVector::operator+=(const CVector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector add: dimension mismatch");
  for (int i = 0; i < dim(); ++i) v_[i] += o.v_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector sub: dimension mismatch");
  for (int i = 0; i < dim(); ++i) v_[i] -= o.v_[i];
  return *this;
}

CVector& CVector::operator*=(cplx z) {
  for (cplx& v : v_) v *= z;
  return *this;
}

CVector operator*(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.dim()) throw std::invalid_argument("matvec: dimension mismatch");
  CVector out(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    cplx s = 0.0;
    for (int c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

CVector operator-(CVector a, const CVector& b) { return a -= b; }
CVector operator*(cplx z, CVector v) { return v *= z; }

cplx dot(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  cplx s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace sunspin
