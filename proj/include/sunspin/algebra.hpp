#pragma once

#include <complex>
#include <span>
#include <vector>

namespace sunspin {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 256;

/// Dense row-major complex matrix. Everything in this project is small
/// (single sites are 2x2..5x5, chains stay below 256x256), so there is no
/// sparse path and all operations return fresh values.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols);
  static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }
  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  CMatrix adjoint() const;
  cplx trace() const;
  double max_abs() const;
  bool all_finite() const;

  bool is_hermitian(double tol = 1e-12) const;
  bool is_antihermitian(double tol = 1e-12) const;
  bool is_unitary(double tol = 1e-12) const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx z);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx z, CMatrix m);

/// AB - BA.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Kronecker product; refuses results above the 256-dimensional chain cap.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Matrix exponential by scaling-and-squaring with a machine-precision
/// truncated series. Diagonal input is exponentiated entrywise.
CMatrix expm(const CMatrix& m);

/// Complex column vector.
class CVector {
 public:
  CVector() = default;
  explicit CVector(int dim) : v_(dim) {}
  static CVector basis(int dim, int k);

  int dim() const { return static_cast<int>(v_.size()); }
  cplx& operator[](int i) { return v_[i]; }
  const cplx& operator[](int i) const { return v_[i]; }
  std::span<const cplx> data() const { return v_; }

  double norm() const;
  bool all_finite() const;
  CVector& operator+=(const CVector& o);
  CVector& operator-=(const CVector& o);
  CVector& operator*=(cplx z);

 private:
  std::vector<cplx> v_;
};

CVector operator*(const CMatrix& m, const CVector& v);
CVector operator-(CVector a, const CVector& b);
CVector operator*(cplx z, CVector v);

/// <a|b>, conjugating the first argument.
cplx dot(const CVector& a, const CVector& b);

}  // namespace sunspin
