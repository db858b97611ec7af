#pragma once
// Dense exact linear algebra: generic field matrices, integer lattices (HNF, kernels,
// saturation), characteristic polynomials.

#include <vector>

#include "core/poly.hpp"

namespace msadj {

template <class F>
struct Mat {
  long nr = 0, nc = 0;
  std::vector<F> a;  // row-major

  Mat() = default;
  Mat(long r, long c) : nr(r), nc(c), a(r * c, F(0)) {}
  F& at(long i, long j) { return a[i * nc + j]; }
  const F& at(long i, long j) const { return a[i * nc + j]; }

  static Mat identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; i++) m.at(i, i) = F(1);
    return m;
  }
  bool operator==(const Mat& o) const { return nr == o.nr && nc == o.nc && a == o.a; }

  Mat operator*(const Mat& o) const {
    Mat r(nr, o.nc);
    for (long i = 0; i < nr; i++)
      for (long k = 0; k < nc; k++) {
        const F& v = at(i, k);
        if (v == F(0)) continue;
        for (long j = 0; j < o.nc; j++) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }
  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a.size(); i++) r.a[i] += o.a[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a.size(); i++) r.a[i] -= o.a[i];
    return r;
  }
  Mat operator*(const F& s) const {
    Mat r = *this;
    for (auto& v : r.a) v = v * s;
    return r;
  }
  Mat operator-() const { return *this * F(-1); }
  Mat transpose() const {
    Mat r(nc, nr);
    for (long i = 0; i < nr; i++)
      for (long j = 0; j < nc; j++) r.at(j, i) = at(i, j);
    return r;
  }
  std::vector<F> apply(const std::vector<F>& x) const {  // column vector
    std::vector<F> y(nr, F(0));
    for (long i = 0; i < nr; i++)
      for (long j = 0; j < nc; j++)
        if (!(at(i, j) == F(0))) y[i] += at(i, j) * x[j];
    return y;
  }
  std::vector<F> row(long i) const { return std::vector<F>(a.begin() + i * nc, a.begin() + (i + 1) * nc); }
  void set_row(long i, const std::vector<F>& v) {
    for (long j = 0; j < nc; j++) at(i, j) = v[j];
  }
  bool is_zero() const {
    for (auto& v : a)
      if (!(v == F(0))) return false;
    return true;
  }
};

using QMat = Mat<Rat>;
using ZMat = Mat<Int>;

template <class F>
Mat<F> matmul(const Mat<F>& A, const Mat<F>& B) {
  Mat<F> C(A.nr, B.nc);
  for (long i = 0; i < A.nr; i++)
    for (long l = 0; l < A.nc; l++) {
      const F& v = A.at(i, l);
      if (v == F(0)) continue;
      for (long j = 0; j < B.nc; j++) C.at(i, j) += v * B.at(l, j);
    }
  return C;
}

template <class F>
Mat<F> identity_mat(long n) {
  Mat<F> I(n, n);
  for (long i = 0; i < n; i++) I.at(i, i) = F(1);
  return I;
}

// Row-reduce A in place to reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<long> rref(Mat<F>& A) {
  std::vector<long> pivots;
  long r = 0;
  for (long j = 0; j < A.nc && r < A.nr; j++) {
    long piv = -1;
    for (long i = r; i < A.nr; i++)
      if (!(A.at(i, j) == F(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (long c = 0; c < A.nc; c++) std::swap(A.at(piv, c), A.at(r, c));
    F inv = F(1) / A.at(r, j);
    for (long c = j; c < A.nc; c++) A.at(r, c) = A.at(r, c) * inv;
    for (long i = 0; i < A.nr; i++) {
      if (i == r) continue;
      F t = A.at(i, j);
      if (t == F(0)) continue;
      for (long c = j; c < A.nc; c++) A.at(i, c) -= t * A.at(r, c);
    }
    pivots.push_back(j);
    r++;
  }
  return pivots;
}

template <class F>
long rank(Mat<F> A) {
  return (long)rref(A).size();
}

// Basis of the right kernel {x : A x = 0}; rows of the result are the basis vectors.
template <class F>
Mat<F> kernel(Mat<F> A) {
  auto piv = rref(A);
  std::vector<int> is_piv(A.nc, 0);
  for (long p : piv) is_piv[p] = 1;
  std::vector<long> frees;
  for (long j = 0; j < A.nc; j++)
    if (!is_piv[j]) frees.push_back(j);
  Mat<F> K((long)frees.size(), A.nc);
  for (size_t fi = 0; fi < frees.size(); fi++) {
    long f = frees[fi];
    K.at(fi, f) = F(1);
    for (size_t pi = 0; pi < piv.size(); pi++) K.at(fi, piv[pi]) = -A.at(pi, f);
  }
  return K;
}

// Matrix of the operator M on the invariant subspace spanned by the rows of
// R, in the row basis: column i holds the R-coordinates of M applied to row i.
template <class F>
Mat<F> restrict_to_rows(const Mat<F>& R, const Mat<F>& M) {
  Mat<F> Rt(R.nc, R.nr);
  for (long i = 0; i < R.nr; i++)
    for (long j = 0; j < R.nc; j++) Rt.at(j, i) = R.at(i, j);
  Mat<F> out(R.nr, R.nr);
  for (long i = 0; i < R.nr; i++) {
    std::vector<F> x;
    if (!solve(Rt, M.apply(R.row(i)), x))
      throw domain_error("restrict_to_rows: subspace not invariant");
    for (long j = 0; j < R.nr; j++) out.at(j, i) = x[j];
  }
  return out;
}

// Solve A x = b; returns false if inconsistent. x gets one solution.
template <class F>
bool solve(const Mat<F>& A, const std::vector<F>& b, std::vector<F>& x) {
  Mat<F> M(A.nr, A.nc + 1);
  for (long i = 0; i < A.nr; i++) {
    for (long j = 0; j < A.nc; j++) M.at(i, j) = A.at(i, j);
    M.at(i, A.nc) = b[i];
  }
  auto piv = rref(M);
  for (long p : piv)
    if (p == A.nc) return false;
  x.assign(A.nc, F(0));
  for (size_t pi = 0; pi < piv.size(); pi++) x[piv[pi]] = M.at(pi, A.nc);
  return true;
}

template <class F>
Mat<F> inverse(const Mat<F>& A) {
  if (A.nr != A.nc) throw domain_error("inverse: not square");
  Mat<F> M(A.nr, 2 * A.nc);
  for (long i = 0; i < A.nr; i++) {
    for (long j = 0; j < A.nc; j++) M.at(i, j) = A.at(i, j);
    M.at(i, A.nc + i) = F(1);
  }
  auto piv = rref(M);
  if ((long)piv.size() != A.nr) throw domain_error("inverse: singular");
  Mat<F> R(A.nr, A.nc);
  for (long i = 0; i < A.nr; i++)
    for (long j = 0; j < A.nc; j++) R.at(i, j) = M.at(i, A.nc + j);
  return R;
}

template <class F>
F det(Mat<F> A) {
  if (A.nr != A.nc) throw domain_error("det: not square");
  F d(1);
  for (long j = 0; j < A.nc; j++) {
    long piv = -1;
    for (long i = j; i < A.nr; i++)
      if (!(A.at(i, j) == F(0))) {
        piv = i;
        break;
      }
    if (piv < 0) return F(0);
    if (piv != j) {
      for (long c = 0; c < A.nc; c++) std::swap(A.at(piv, c), A.at(j, c));
      d = -d;
    }
    d = d * A.at(j, j);
    F inv = F(1) / A.at(j, j);
    for (long i = j + 1; i < A.nr; i++) {
      F t = A.at(i, j) * inv;
      if (t == F(0)) continue;
      for (long c = j; c < A.nc; c++) A.at(i, c) -= t * A.at(j, c);
    }
  }
  return d;
}

// Characteristic polynomial det(x I - A) via Hessenberg reduction (field F).
template <class F>
Poly<F> charpoly(Mat<F> H) {
  long n = H.nr;
  if (n == 0) return Poly<F>::constant(F(1));
  // similarity reduction to upper Hessenberg
  for (long j = 0; j + 2 < n; j++) {
    long piv = -1;
    for (long i = j + 1; i < n; i++)
      if (!(H.at(i, j) == F(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (long c = 0; c < n; c++) std::swap(H.at(piv, c), H.at(j + 1, c));
      for (long r = 0; r < n; r++) std::swap(H.at(r, piv), H.at(r, j + 1));
    }
    F inv = F(1) / H.at(j + 1, j);
    for (long i = j + 2; i < n; i++) {
      F t = H.at(i, j) * inv;
      if (t == F(0)) continue;
      for (long c = 0; c < n; c++) H.at(i, c) -= t * H.at(j + 1, c);
      for (long r = 0; r < n; r++) H.at(r, j + 1) += t * H.at(r, i);
    }
  }
  std::vector<Poly<F>> p(n + 1);
  p[0] = Poly<F>::constant(F(1));
  Poly<F> X = Poly<F>::x();
  for (long m = 1; m <= n; m++) {
    p[m] = (X - Poly<F>::constant(H.at(m - 1, m - 1))) * p[m - 1];
    F prod(1);
    for (long i = m - 1; i >= 1; i--) {
      prod = prod * H.at(i, i - 1);
      p[m] = p[m] - p[i - 1] * (H.at(i - 1, m - 1) * prod);
    }
  }
  return p[n];
}

// ---------- integer lattice routines ----------

// Row-style Hermite normal form; zero rows dropped. Rows span the same lattice.
ZMat hnf(ZMat A);

// Integer right-kernel of A: rows of the result are a basis of {x in Z^nc : A x = 0}.
// The result is automatically saturated (primitive).
ZMat kernel_z(const ZMat& A);

// Saturation of the row lattice of A inside Z^nc.
ZMat saturate(const ZMat& A);

// convert
inline QMat to_qmat(const ZMat& A) {
  QMat B(A.nr, A.nc);
  for (size_t i = 0; i < A.a.size(); i++) B.a[i] = Rat(A.a[i]);
  return B;
}

// scale rows by lcm of denominators
inline ZMat to_zmat_rowscaled(const QMat& A) {
  ZMat B(A.nr, A.nc);
  for (long i = 0; i < A.nr; i++) {
    Int d = 1;
    for (long j = 0; j < A.nc; j++) d = lcm(d, A.at(i, j).get_den());
    for (long j = 0; j < A.nc; j++) {
      Rat v = A.at(i, j) * Rat(d);
      B.at(i, j) = v.get_num();
    }
  }
  return B;
}

}  // namespace msadj
