#pragma once
// Dimension bookkeeping for spaces of cusp and Eisenstein forms with character,
// computed by closed formula (no modular symbols involved) so the linear
// algebra elsewhere can be checked against an independent count.

#include "chars/dirichlet.hpp"

namespace msadj {

// Index [SL2(Z) : Gamma_0(N)].
Int gamma0_index(const Int& N);
// Number of cusps of Gamma_0(N).
Int gamma0_ncusps(const Int& N);

// dim S_k(N, chi) for k >= 2. Zero when chi(-1) != (-1)^k.
Int dim_cusp(const Int& N, long k, const DirichletChar& chi);

// dim Eis_k(N, chi) for k >= 2, by counting pairs of primitive characters.
Int dim_eis(const Int& N, long k, const DirichletChar& chi);

// Hecke bound: operators agree on S_k(N, chi) iff eigenvalues match up to this.
long sturm_bound(const Int& N, long k);

}  // namespace msadj
