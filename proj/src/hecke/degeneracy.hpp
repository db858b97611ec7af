#pragma once
// Level-changing operators. The building block is the weighted transfer
// attached to the matrix (1,0;0,t) between symbol spaces at nested levels;
// stacking transfers against the -T_p / p S_p twists gives the operator gamma
// that deprives an eigenform of its Fourier coefficients at a set of primes
// while keeping the rest intact, and its pairing-adjoint product.

#include "modsym/pairing.hpp"
#include "modsym/space.hpp"

namespace msadj {

// The character of sp, rewritten modulo the larger level N2 (same primitive).
DirichletChar extend_char(const DirichletChar& chi, const Int& N2);

// [Gamma_0(N) : Gamma^0(t) cap Gamma_0(L)] for N | L, via local Iwahori-type
// indices.
Int transfer_index(const Int& N, const Int& t, const Int& L);

// Representatives of (Gamma^0(t) cap Gamma_0(L)) \ Gamma_0(N), N | L. A coset
// is pinned down by the pair (top row mod t up to units, bottom row mod L up
// to units); representatives are found by a bounded scan over bottom-row lifts
// and top-row shears, and the count is checked against transfer_index.
std::vector<M22> transfer_cosets(const Int& N, const Int& t, const Int& L);

// Transfer S(N) -> S(N2) attached to (1,0;0,t), for t with N*t | N2:
//   x |-> sum_i psibar(d_i) (g_t eta_i) * x,
// eta_i as above with L = N2/t. Columns are images of basis elements.
template <class F>
Mat<F> level_transfer(const ManinSpace<F>& src, const ManinSpace<F>& dst, const Int& t);

template <class F>
struct GammaOp {
  Mat<F> mat;          // dim(dst) x dim(src)
  Rat norm_constant;   // global scale folded into mat (1 for weight 2 and empty sets)
};

// gamma = M^{(2-k)/2} sum over m | M of transfer_{M/m} * phi_m / m, where
// M = dst.N/src.N and phi_1 = 1, phi_p = -T_p, phi_{p^2} = p S_p,
// multiplicative in m. On an eigencomponent this deprives the q-expansion of
// its coefficients at indices divisible by a prime of M, leaving the others
// alone. M must be of the form prod p^{delta_p} with delta_p <= 2.
template <class F>
GammaOp<F> degeneracy_gamma(const ManinSpace<F>& src, const ManinSpace<F>& dst);

// gamma^t gamma on the cuspidal subspace of src: G_src^{-1} gamma_c^T G_dst
// gamma_c, where gamma_c is gamma restricted to the cuspidal subspaces and the
// G's are the twisted intersection Grams. On an eigenform component this is
// the level-raising mass, a scalar.
Mat<Rat> gamma_adjoint_product(const QSpace& src, const QSpace& dst, const Mat<Rat>& gamma);

// The scalar predicted for gamma^t gamma on the eigenform component with
// Hecke eigenvalue ap at p, by local type:
//   delta = 2:  (1 - 1/p)((1 + 1/p)^2 - psi(p)^{-1} p^{-k} a_p^2) psi(p) p^{k-1}
//   delta = 1, special:           (1 - p^{-2}) (-a_p)
//   delta = 1, principal series:  (1 - p^{-1}) (-a_p)
//   delta = 0:  1
// psip is psi(p) (nonzero only in the delta = 2 case).
NFElem gtg_local_factor(long delta, bool special, const NFElem& ap, const NFElem& psip,
                        long k, const Int& p);

}  // namespace msadj
