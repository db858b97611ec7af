#include "core/linalg.hpp"

namespace msadj {

// Hermite normal form with unimodular row transform tracking (U * A_in = A_out).
static ZMat hnf_transform(ZMat A, ZMat* U_out) {
  long nr = A.nr, nc = A.nc;
  ZMat U = ZMat::identity(nr);
  long r = 0;
  for (long j = 0; j < nc && r < nr; j++) {
    // Euclidean elimination in column j among rows r..nr-1
    for (;;) {
      long piv = -1;
      Int best;
      for (long i = r; i < nr; i++) {
        if (A.at(i, j) == 0) continue;
        Int v = abs(A.at(i, j));
        if (piv < 0 || v < best) {
          piv = i;
          best = v;
        }
      }
      if (piv < 0) break;
      if (piv != r) {
        for (long c = 0; c < nc; c++) std::swap(A.at(piv, c), A.at(r, c));
        for (long c = 0; c < nr; c++) std::swap(U.at(piv, c), U.at(r, c));
      }
      bool done = true;
      for (long i = r + 1; i < nr; i++) {
        if (A.at(i, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), A.at(i, j).get_mpz_t(), A.at(r, j).get_mpz_t());
        if (q != 0) {
          for (long c = 0; c < nc; c++) A.at(i, c) -= q * A.at(r, c);
          for (long c = 0; c < nr; c++) U.at(i, c) -= q * U.at(r, c);
        }
        if (A.at(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (A.at(r, j) == 0) continue;
    if (A.at(r, j) < 0) {
      for (long c = 0; c < nc; c++) A.at(r, c) = -A.at(r, c);
      for (long c = 0; c < nr; c++) U.at(r, c) = -U.at(r, c);
    }
    // reduce rows above
    for (long i = 0; i < r; i++) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A.at(i, j).get_mpz_t(), A.at(r, j).get_mpz_t());
      if (q != 0) {
        for (long c = 0; c < nc; c++) A.at(i, c) -= q * A.at(r, c);
        for (long c = 0; c < nr; c++) U.at(i, c) -= q * U.at(r, c);
      }
    }
    r++;
  }
  if (U_out) *U_out = U;
  return A;  // full height; rows 0..r-1 are the echelon rows, the rest are zero
}

ZMat hnf(ZMat A) {
  ZMat H = hnf_transform(std::move(A), nullptr);
  long r = H.nr;
  while (r > 0) {
    bool zero = true;
    for (long j = 0; j < H.nc; j++)
      if (H.at(r - 1, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) break;
    r--;
  }
  H.nr = r;
  H.a.resize(r * H.nc);
  return H;
}

ZMat kernel_z(const ZMat& A) {
  // Left kernel of A^T equals right kernel of A: row-reduce A^T, kernel rows of U.
  ZMat B = A.transpose();  // (nc x nr)
  ZMat U;
  ZMat H = hnf_transform(B, &U);
  // rows of H that are zero correspond to rows of U spanning {v : v B = 0},
  // i.e. v A^T = 0, i.e. A v^T = 0.
  std::vector<long> zrows;
  for (long i = 0; i < H.nr; i++) {
    bool z = true;
    for (long j = 0; j < H.nc; j++)
      if (H.at(i, j) != 0) {
        z = false;
        break;
      }
    if (z) zrows.push_back(i);
  }
  ZMat K((long)zrows.size(), A.nc);
  for (size_t i = 0; i < zrows.size(); i++)
    for (long j = 0; j < A.nc; j++) K.at(i, j) = U.at(zrows[i], j);
  return hnf(K);
}

ZMat saturate(const ZMat& A) {
  ZMat K = kernel_z(A);
  if (K.nr == 0) {
    // full rank: saturation is Z^nc intersect QA; compute via kernel of empty matrix trick
    // rowspace has full rank nc only if rank(A)==nc; otherwise K nonempty. Here rank==nc.
    return ZMat::identity(A.nc);
  }
  return kernel_z(K);
}

}  // namespace msadj
