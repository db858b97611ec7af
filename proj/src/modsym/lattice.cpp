#include "modsym/lattice.hpp"

namespace msadj {

SymbolLattice integral_lattices(const QSpace& sp) {
  // clear denominators of the generator images and Hermite-reduce
  Int D(1);
  for (const auto& v : sp.gen2basis.a) D = lcm(D, v.get_den());
  ZMat A(sp.gen2basis.nr, sp.gen2basis.nc);
  for (long i = 0; i < A.nr; ++i)
    for (long j = 0; j < A.nc; ++j) {
      const Rat& v = sp.gen2basis.at(i, j);
      A.at(i, j) = v.get_num() * (D / v.get_den());
    }
  ZMat H = hnf(A);
  if (H.nr != sp.dim) throw domain_error("integral_lattices: rank defect");

  SymbolLattice out;
  out.basis = Mat<Rat>(H.nr, H.nc);
  for (long i = 0; i < H.nr; ++i)
    for (long j = 0; j < H.nc; ++j) {
      Rat v(H.at(i, j));
      v /= Rat(D);
      out.basis.at(i, j) = v;
    }

  // boundary of each lattice basis vector; integer kernel = cuspidal part
  Mat<Rat> C(sp.boundary_basis.nr, H.nr);
  Int D2(1);
  for (long i = 0; i < C.nr; ++i)
    for (long j = 0; j < H.nr; ++j) {
      Rat s(0);
      for (long t = 0; t < H.nc; ++t)
        s += sp.boundary_basis.at(i, t) * out.basis.at(j, t);
      C.at(i, j) = s;
      D2 = lcm(D2, s.get_den());
    }
  ZMat Ci(C.nr, C.nc);
  for (long i = 0; i < C.nr; ++i)
    for (long j = 0; j < C.nc; ++j)
      Ci.at(i, j) = C.at(i, j).get_num() * (D2 / C.at(i, j).get_den());
  ZMat K = kernel_z(Ci);

  out.cuspidal = Mat<Rat>(K.nr, H.nc);
  for (long i = 0; i < K.nr; ++i)
    for (long j = 0; j < H.nc; ++j) {
      Rat s(0);
      for (long t = 0; t < K.nc; ++t)
        s += Rat(K.at(i, t)) * out.basis.at(t, j);
      out.cuspidal.at(i, j) = s;
    }
  return out;
}

}  // namespace msadj
