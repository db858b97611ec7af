#include "hecke/degeneracy.hpp"

#include <stdexcept>

namespace msadj {

DirichletChar extend_char(const DirichletChar& chi, const Int& N2) {
  if (chi.modulus() == N2) return chi;
  if (mod(N2, chi.conductor()) != 0) throw std::domain_error("extend_char: conductor does not divide the new level");
  if (chi.is_trivial()) return DirichletChar::trivial(N2);
  for (Int j(1); j < N2; j += 1) {
    if (gcd(j, N2) != 1) continue;
    DirichletChar cand = DirichletChar::make(N2, j);
    if (cand.same_primitive(chi)) return cand;
  }
  throw std::domain_error("extend_char: no compatible character found");
}

Int transfer_index(const Int& N, const Int& t, const Int& L) {
  if (mod(L, N) != 0) throw std::domain_error("transfer_index: N must divide L");
  // [SL2 : Gamma^0(t) cap Gamma_0(L)] = prod_{p | tL} p^(a+b-1)(p+1),
  // a = v_p(t), b = v_p(L); divide by the same product for Gamma_0(N).
  Int num(1), den(1);
  for (auto& [p, b] : factor(t * L)) num *= pow(p, (unsigned long)(b - 1)) * (p + 1);
  for (auto& [p, e] : factor(N)) den *= pow(p, (unsigned long)(e - 1)) * (p + 1);
  if (mod(num, den) != 0) throw std::domain_error("transfer_index: not a subgroup");
  return num / den;
}

namespace {
// c' == c mod M with gcd(c', d) = 1, or nullopt when every lift shares a factor
std::optional<Int> primitive_shift(const Int& c, const Int& d, const Int& M) {
  if (d == 0) {
    if (mod(c, M) == mod(Int(1), M)) return Int(1);
    if (mod(c, M) == mod(Int(-1), M)) return Int(-1);
    return std::nullopt;
  }
  if (gcd(gcd(c, d), M) != 1) return std::nullopt;
  Int shear(1);  // product of primes q | d, q not dividing c
  for (auto& [q, e] : factor(d < 0 ? Int(-d) : d))
    if (mod(c, q) != 0) shear *= q;
  Int cp = c + M * shear;
  if (gcd(cp, d) != 1) throw std::logic_error("primitive_shift");
  return cp;
}
}  // namespace

std::vector<M22> transfer_cosets(const Int& N, const Int& t, const Int& L) {
  if (mod(L, N) != 0) throw std::domain_error("transfer_cosets: N must divide L");
  long tl = (long)t.get_si();
  if (t == 1 && L == N) return {M22::id()};

  P1 rows;  // top rows mod t, same up-to-unit equivalence as bottom rows
  rows.build(t);
  P1 bot;
  bot.build(L);

  std::vector<M22> reps;
  for (long ib = 0; ib < bot.size(); ib++) {
    // the class of Gamma_0(N) bottom rows: c == 0 mod N is unit-invariant
    if (mod(Int(bot.reps[ib].first), N) != 0) continue;
    const M22& lift = bot.lifts[ib];
    Int c0 = lift.c, d0 = lift.d;
    std::vector<char> seen(rows.size(), 0);
    long found = 0;
    for (long s1 = 0; s1 < tl && found < rows.size(); s1++)
      for (long s2 = 0; s2 < tl && found < rows.size(); s2++) {
        Int d = d0 + L * s2;
        auto cfix = primitive_shift(c0 + L * s1, d, t * L);
        if (!cfix) continue;
        Int c = *cfix;
        Int u, v;
        gcdext(c, d, u, v);  // u c + v d = 1
        Int a0 = v, b0 = -u; // a0 d - b0 c = 1
        for (long tt = 0; tt < tl; tt++) {
          Int a = a0 + tt * c, b = b0 + tt * d;
          long r = rows.index(a, b);
          if (seen[r]) continue;
          seen[r] = 1;
          found++;
          reps.emplace_back(a, b, c, d);
        }
      }
  }
  Int want = transfer_index(N, t, L);
  if (Int((long)reps.size()) != want)
    throw std::logic_error("transfer_cosets: enumeration does not match the index");
  return reps;
}

template <class F>
Mat<F> level_transfer(const ManinSpace<F>& src, const ManinSpace<F>& dst, const Int& t) {
  if (src.k != dst.k) throw std::domain_error("level_transfer: weights differ");
  if (mod(dst.N, src.N * t) != 0) throw std::domain_error("level_transfer: need N t | N'");
  auto etas = transfer_cosets(src.N, t, dst.N / t);
  M22 gt(1, 0, 0, t);

  Mat<F> out(dst.dim, src.dim);
  long mdeg = src.m;
  for (long j = 0; j < src.dim; j++) {
    long gen = src.basis_gens[j];
    long cls = gen / (mdeg + 1), i = gen % (mdeg + 1);
    const M22& g0 = src.p1.lifts[cls];
    std::vector<F> Q(mdeg + 1, F(Rat(0)));
    Q[i] = F(Rat(1));
    std::vector<F> img(dst.dim, F(Rat(0)));
    for (const M22& eta : etas) {
      auto dinv = invmod(eta.d, src.N);
      F w = src.chi_val(*dinv);
      if (w == F(Rat(0))) throw std::logic_error("level_transfer: non-unit diagonal");
      M22 h = gt * eta * g0;
      auto term = dst.path_symbol(h, rho_poly(h, Q));
      for (long r = 0; r < dst.dim; r++) img[r] += w * term[r];
    }
    for (long r = 0; r < dst.dim; r++) out.at(r, j) = img[r];
  }
  return out;
}

template <class F>
GammaOp<F> degeneracy_gamma(const ManinSpace<F>& src, const ManinSpace<F>& dst) {
  if (mod(dst.N, src.N) != 0) throw std::domain_error("degeneracy_gamma: levels not nested");
  Int Msig = dst.N / src.N;
  GammaOp<F> out;
  out.norm_constant = Rat(1);
  if (Msig == 1) {
    out.mat = identity_mat<F>(src.dim);
    return out;
  }
  for (auto& [p, e] : factor(Msig)) {
    if (e > 2) throw std::domain_error("degeneracy_gamma: exponent above 2 at " + p.get_str());
    if (e == 2 && mod(src.N, p) == 0)
      throw std::domain_error("degeneracy_gamma: square step at a level prime");
  }

  // The transfer by t realizes, against eigencomponents, the inclusion
  // attached to the complementary divisor M/t with an extra weight M/t.
  // Pairing transfer-by-t with phi_{M/t} / (M/t) therefore produces the
  // coefficient-deprived combination 1 - a_p B_p + psi(p) p^{k-1} B_{p^2}
  // at each adjoined prime.
  std::map<Int, Mat<F>> tp;  // -T_p on the source space
  out.mat = Mat<F>(dst.dim, src.dim);
  for (const Int& m : divisors(Msig)) {
    // phi_m = prod over p^e || m of (-T_p) or (p S_p)
    Mat<F> phi = identity_mat<F>(src.dim);
    for (auto& [p, e] : factor(m)) {
      if (e == 1) {
        auto it = tp.find(p);
        if (it == tp.end()) it = tp.emplace(p, -src.hecke(p)).first;
        phi = matmul(phi, it->second);
      } else {
        F sp = src.chi_val(p) * F(Rat(pow(p, (unsigned long)(src.k - 1))));
        phi = phi * sp;
      }
    }
    phi = phi * F(Rat(1) / Rat(m));
    out.mat = out.mat + matmul(level_transfer(src, dst, Msig / m), phi);
  }
  // the raw transfers carry an extra M^{(k-2)/2}; undo it so the leading
  // eigencomponent coefficient is exactly 1
  if (src.k > 2) {
    if (src.k % 2 != 0) throw std::domain_error("degeneracy_gamma: odd weight");
    Rat nc = Rat(1) / Rat(pow(Msig, (unsigned long)((src.k - 2) / 2)));
    out.norm_constant = nc;
    out.mat = out.mat * F(nc);
  }
  return out;
}

Mat<Rat> gamma_adjoint_product(const QSpace& src, const QSpace& dst, const Mat<Rat>& gamma) {
  const Mat<Rat>&Cs = src.cuspidal, &Cd = dst.cuspidal;
  Mat<Rat> CdT = Cd.transpose();
  // gamma restricted to the cuspidal subspaces, columns = images
  Mat<Rat> gc(Cd.nr, Cs.nr);
  for (long j = 0; j < Cs.nr; j++) {
    auto v = gamma.apply(Cs.row(j));
    std::vector<Rat> x;
    if (!solve(CdT, v, x)) throw std::logic_error("gamma_adjoint_product: image not cuspidal");
    for (long r = 0; r < Cd.nr; r++) gc.at(r, j) = x[r];
  }
  Mat<Rat> Gs = CoverPairing(src).gram_twisted(Cs);
  Mat<Rat> Gd = CoverPairing(dst).gram_twisted(Cd);
  return matmul(inverse(Gs), matmul(gc.transpose(), matmul(Gd, gc)));
}

NFElem gtg_local_factor(long delta, bool special, const NFElem& ap, const NFElem& psip,
                        long k, const Int& p) {
  if (delta == 0) return NFElem(Rat(1));
  Rat invp(1);
  invp /= Rat(p);
  if (delta == 1) {
    Rat f(1);
    f -= special ? invp * invp : invp;
    return NFElem(f) * (-ap);
  }
  // delta = 2
  Rat pk1(pow(p, (unsigned long)(k - 1)));
  Rat pmk(1);
  pmk /= Rat(pow(p, (unsigned long)k));
  NFElem sq = ap * ap / psip * NFElem(pmk);
  NFElem bracket = NFElem((Rat(1) + invp) * (Rat(1) + invp)) - sq;
  return NFElem(Rat(1) - invp) * bracket * psip * NFElem(pk1);
}

template Mat<Rat> level_transfer(const ManinSpace<Rat>&, const ManinSpace<Rat>&, const Int&);
template Mat<NFElem> level_transfer(const ManinSpace<NFElem>&, const ManinSpace<NFElem>&, const Int&);
template GammaOp<Rat> degeneracy_gamma(const ManinSpace<Rat>&, const ManinSpace<Rat>&);
template GammaOp<NFElem> degeneracy_gamma(const ManinSpace<NFElem>&, const ManinSpace<NFElem>&);

}  // namespace msadj
