#pragma once
// Weight-k symbol spaces for Gamma_0(N) with character: generators are
// (projective line class) x (monomial of degree k-2), modulo the two- and
// three-term relations, with the character folded in through witness matrices.
// Works over Q for characters of order <= 2 and over a cyclotomic field
// otherwise (template parameter F is Rat or NFElem).

#include <array>

#include "chars/dirichlet.hpp"
#include "core/linalg.hpp"

namespace msadj {

struct M22 {
  Int a, b, c, d;
  M22() : a(0), b(0), c(0), d(0) {}
  M22(Int aa, Int bb, Int cc, Int dd)
      : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {}
  M22 operator*(const M22& o) const {
    return M22(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
  }
  M22 adj() const { return M22(d, -b, -c, a); }
  Int det() const { return a * d - b * c; }
  bool operator==(const M22& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  static M22 id() { return M22(1, 0, 0, 1); }
};

// SL2(Z) lift with bottom row congruent to (c, d) mod N; needs gcd(c,d,N)=1.
M22 sl2_lift_bottom(const Int& c, const Int& d, const Int& N);
// SL2(Z) matrix congruent to diag(u, v) mod N (uv == 1 mod N required).
M22 sl2_lift_diag(const Int& u, const Int& v, const Int& N);
// SL2(Z) matrix with first column (p, q) (primitive vector).
M22 sl2_complete_column(const Int& p, const Int& q);

// action on homogeneous polynomials of degree m: (rho(h)P)(v) = P(adj(h) v);
// poly as coefficient vector, slot i = coefficient of X^i Y^(m-i).
template <class F>
std::vector<F> rho_poly(const M22& h, const std::vector<F>& P);

struct P1 {
  Int N;
  long n = 0;  // N as long
  std::vector<std::pair<long, long>> reps;  // canonical (c, d), lex smallest in orbit
  std::vector<M22> lifts;                   // SL2(Z) lift of each rep
  std::vector<long> table;                  // n*n entries, class index or -1

  void build(const Int& N);
  long size() const { return (long)reps.size(); }
  long index(const Int& c, const Int& d) const;
};

template <class F>
struct ManinSpace {
  Int N;
  long k, m;  // weight and polynomial degree m = k-2
  DirichletChar chi;
  const NumberField* Kchi = nullptr;  // cyclotomic field of the character values, or null
  P1 p1;
  bool collapsed = false;  // parity mismatch: the whole space is zero

  long ngen = 0;  // p1.size() * (m+1)
  long dim = 0;
  std::vector<long> basis_gens;  // generator index of each basis element
  Mat<F> gen2basis;              // ngen x dim; row g = coordinates of generator g

  // boundary data
  long ncusp = 0;                        // live cusp classes
  std::vector<std::array<Int, 2>> cusp_reps;
  Mat<F> boundary_gens;                  // ncusp x ngen
  Mat<F> boundary_basis;                 // ncusp x dim
  Mat<F> cuspidal;                       // rows = basis of ker(boundary) in basis coords

  ManinSpace(const Int& N, long k, const DirichletChar& chi);

  long gen_id(long cls, long i) const { return cls * (m + 1) + i; }
  F chi_val(const Int& a) const;  // character value as F (by table)

  // coordinates of the class of rho(g)Q (x) {g0, g infinity} for unimodular g
  std::vector<F> project(const M22& g, const std::vector<F>& Q) const;
  // coordinates of P (x) {h0, h infinity} for any integer h with det > 0;
  // P is the already-transformed polynomial
  std::vector<F> path_symbol(const M22& h, const std::vector<F>& P) const;
  // P (x) {infinity -> a/c} via continued fractions
  std::vector<F> mop(Int a, Int c, const std::vector<F>& P) const;

  Mat<F> hecke(const Int& p) const;         // T_p (U_p when p | N)
  Mat<F> atkin_lehner() const;              // full Fricke matrix at level N
  Mat<F> star() const;                      // complex-conjugation involution

  std::vector<F> zero() const { return std::vector<F>(dim, F(Rat(0))); }

 private:
  std::vector<F> psi_table;  // chi values indexed by residue, 0 slot for non-units
  void build_space();
  void build_boundary();
  // cusp bookkeeping during construction
  std::vector<M22> cusp_completions;
  std::vector<bool> cusp_alive;
  std::pair<long, F> cusp_class(const Int& p, const Int& q);  // matches or creates
};

using QSpace = ManinSpace<Rat>;

}  // namespace msadj
