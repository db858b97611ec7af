#include "congruence/eta.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hecke/degeneracy.hpp"
#include "modsym/lattice.hpp"
#include "modsym/pairing.hpp"

namespace msadj {

long sigma_exponent(const NewformRecord& f, const Int& p) {
  if (mod(f.level, p) != 0) return 2;
  for (const auto& lt : f.local_types)
    if (lt.p == p) return lt.delta;
  throw std::domain_error("sigma_exponent: no local type recorded at " + p.get_str());
}

Int sigma_level(const NewformRecord& f, const std::vector<Int>& sigma) {
  Int NS = f.level;
  for (const Int& p : sigma)
    NS = NS * pow(p, (unsigned long)sigma_exponent(f, p));
  return NS;
}

NFElem naive_adjoint_inv(const NewformRecord& f, const Int& p) {
  Rat invp = Rat(1) / Rat(p);
  if (mod(f.level, p) != 0) {
    NFElem ap = f.eigenvalue(p);
    DirichletChar chi = DirichletChar::from_label(f.character);
    NFElem psip = chi.order() <= 2 ? NFElem(chi.value_rat(p))
                                   : chi.value_nf(p, f.K);
    NFElem c = ap * ap / (psip * NFElem(Rat(pow(p, (unsigned long)(f.weight - 1)))))
               - NFElem(Rat(2));
    return NFElem(Rat(1) - invp) * (NFElem(Rat(1) + invp * invp) - c * NFElem(invp));
  }
  for (const auto& lt : f.local_types) {
    if (lt.p != p) continue;
    if (lt.delta == 0) return NFElem(Rat(1));
    return NFElem(lt.cls == "special" ? Rat(Rat(1) - invp * invp)
                                      : Rat(Rat(1) - invp));
  }
  throw std::domain_error("naive_adjoint_inv: no local type recorded at " + p.get_str());
}

namespace {

Int int_of(const Rat& v) {
  if (v.get_den() != 1) throw std::logic_error("expected an integer entry");
  return v.get_num();
}

// clear denominators column by column; column scaling preserves the left
// kernel (row scaling would not)
ZMat zmat_colscaled(const Mat<Rat>& A) {
  ZMat B(A.nr, A.nc);
  for (long j = 0; j < A.nc; j++) {
    Int L = 1;
    for (long i = 0; i < A.nr; i++) L = lcm(L, A.at(i, j).get_den());
    for (long i = 0; i < A.nr; i++) B.at(i, j) = int_of(A.at(i, j) * Rat(L));
  }
  return B;
}

Mat<Rat> zpoly_at(const ZPoly& h, const Mat<Rat>& A) {  // h(A)
  Mat<Rat> R(A.nr, A.nc);
  Mat<Rat> P = identity_mat<Rat>(A.nr);
  for (long i = 0; i <= h.deg(); i++) {
    R = R + P * Rat(h.c[i]);
    if (i < h.deg()) P = matmul(P, A);
  }
  return R;
}

Mat<Rat> poly_combo(const Mat<Rat>& A, const std::vector<Rat>& c) {  // sum c_i A^i
  Mat<Rat> R(A.nr, A.nc);
  Mat<Rat> P = identity_mat<Rat>(A.nr);
  for (size_t i = 0; i < c.size(); i++) {
    R = R + P * c[i];
    if (i + 1 < c.size()) P = matmul(P, A);
  }
  return R;
}

// monic integer minimal polynomial of an (integral) field element
ZPoly minpoly_int(const NFElem& a) {
  if (a.is_rational()) {
    Rat r = a.rational();
    return ZPoly(std::vector<Int>{-int_of(r), Int(1)});
  }
  long d = a.K->deg;
  Mat<Rat> M(d, d);
  for (long j = 0; j < d; j++) {
    std::vector<Rat> u(d, Rat(0));
    u[j] = 1;
    NFElem prod = NFElem(a.K, u) * a;
    for (long i = 0; i < d; i++) M.at(i, j) = prod.c[i];
  }
  auto fs = factor_zpoly(to_zpoly(charpoly(M)));
  if (fs.size() != 1)
    throw std::logic_error("minpoly_int: multiplication matrix not isotypic");
  ZPoly h = fs[0].first;
  if (h.lc() < 0)
    for (auto& v : h.c) v = -v;
  if (h.lc() != 1) throw std::logic_error("minpoly_int: non-integral eigenvalue");
  return h;
}

// rows spanning the f^Sigma eigenspace of the cuspidal subspace: the kernel
// of U_p for p in Sigma intersected with the minpoly(a_q)-kernels of T_q
Mat<Rat> eigenspace_rows(const QSpace& sp, const NewformRecord& f,
                         const std::vector<Int>& sigma, long want) {
  Mat<Rat> V = sp.cuspidal;
  auto cut = [&](const Mat<Rat>& op, const ZPoly& h) {
    Mat<Rat> M = restrict_to_rows(V, op);
    V = matmul(kernel(zpoly_at(h, M)), V);
  };
  ZPoly x(std::vector<Int>{Int(0), Int(1)});
  for (const Int& p : sigma) cut(sp.hecke(p), x);
  for (auto& [q, aq] : f.ap) {
    if ((long)V.nr == want) break;
    if (mod(sp.N, q) == 0) continue;
    cut(sp.hecke(q), minpoly_int(aq));
  }
  if ((long)V.nr != want)
    throw std::domain_error(
        "eta_ideal: eigenlattice has rank " + std::to_string(V.nr) +
        " over the rationals, expected " + std::to_string(want) +
        " (rank 2 over the Hecke order); extend the record's eigenvalue list");
  return V;
}

}  // namespace

EtaResult eta_ideal(const NewformRecord& f, const std::vector<Int>& sigma,
                    const ZMat* basis_change) {
  if (!f.is_new)
    throw std::domain_error("eta_ideal: oldform record; compute at its true level");
  for (const Int& p : sigma)
    if (!is_prime(p)) throw std::domain_error("eta_ideal: sigma must consist of primes");
  for (size_t i = 0; i + 1 < sigma.size(); i++)
    if (!(sigma[i] < sigma[i + 1]))
      throw std::domain_error("eta_ideal: sigma must be strictly increasing");

  EtaResult out;
  out.weight = f.weight;
  out.sigma = sigma;
  out.K = f.K;
  out.level = sigma_level(f, sigma);

  QSpace sp(out.level, f.weight,
            extend_char(DirichletChar::from_label(f.character), out.level));

  long d = f.K ? f.K->deg : 1;
  long nb = 2 * d;

  Mat<Rat> V = eigenspace_rows(sp, f, sigma, nb);

  // saturated sublattice (cuspidal lattice) intersect V: integer coordinate
  // vectors n with n * L inside V, where the rows of L are the integral
  // cuspidal basis (rational coordinates, integral as a lattice)
  SymbolLattice lat = integral_lattices(sp);
  const Mat<Rat>& L = lat.cuspidal;
  Mat<Rat> W = kernel(V);  // functionals vanishing on V
  ZMat n = kernel_z(zmat_colscaled(matmul(L, W.transpose())).transpose());
  if ((long)n.nr != nb)
    throw std::logic_error("eta_ideal: saturated eigenlattice rank mismatch");
  if (basis_change) {
    if ((long)basis_change->nr != nb || (long)basis_change->nc != nb)
      throw std::domain_error("eta_ideal: basis change must be square of rank " +
                              std::to_string(nb));
    n = matmul(*basis_change, n);
  }
  Mat<Rat> Bq = matmul(to_qmat(n), L);

  // theta realized on the lattice through a field-generating eigenvalue
  Mat<Rat> theta_mat;
  if (d > 1) {
    bool found = false;
    for (auto& [q, aq] : f.ap) {
      if (mod(sp.N, q) == 0) continue;
      Mat<Rat> P(d, d);  // rows: coordinates of a_q^i
      NFElem pw(Rat(1));
      for (long i = 0; i < d; i++) {
        for (long j = 0; j < d; j++)
          P.at(i, j) = j < (long)pw.c.size() ? pw.c[j] : Rat(0);
        pw = pw * aq;
      }
      if (rank(P) != d) continue;
      std::vector<Rat> e(d, Rat(0)), cvec;
      e[1] = 1;  // coordinates of theta
      if (!solve(P.transpose(), e, cvec)) continue;
      theta_mat = poly_combo(restrict_to_rows(Bq, sp.hecke(q)), cvec);
      found = true;
      break;
    }
    if (!found)
      throw std::domain_error(
          "eta_ideal: no recorded eigenvalue generates the coefficient field");
  }

  // stacked translates theta^m b_i and their Gram matrix
  Mat<Rat> S(d * nb, sp.dim);
  {
    Mat<Rat> cur = Bq;
    for (long m = 0; m < d; m++) {
      for (long i = 0; i < nb; i++)
        for (long j = 0; j < sp.dim; j++) S.at(m * nb + i, j) = cur.at(i, j);
      if (m + 1 < d) cur = matmul(theta_mat.transpose(), cur);
    }
  }
  Mat<Rat> G = CoverPairing(sp).gram_twisted(S);

  // structural guarantees the ideal computation relies on, checked not assumed
  for (long i = 0; i < G.nr; i++)
    for (long j = 0; j <= i; j++)
      if (!(G.at(i, j) == -G.at(j, i)))
        throw std::logic_error("eta_ideal: pairing not alternating on the eigenlattice");
  if (d > 1)
    for (long i = 0; i < nb; i++)
      for (long j = 0; j < nb; j++)
        if (!(G.at(nb + i, j) == G.at(i, nb + j)))
          throw std::logic_error("eta_ideal: pairing not Hecke-bilinear");

  // recover <b_i, b_j> in the field from Tr(theta^m <b_i,b_j>) = G[m,i][0,j]
  Mat<Rat> TrM(d, d);
  if (f.K)
    for (long a = 0; a < d; a++)
      for (long b = 0; b < d; b++) TrM.at(a, b) = f.K->basis_traces[a + b];
  for (long i = 0; i < nb; i++)
    for (long j = i + 1; j < nb; j++) {
      NFElem g;
      if (!f.K) {
        g = NFElem(G.at(i, j));
      } else {
        std::vector<Rat> t(d), bb;
        for (long m = 0; m < d; m++) t[m] = G.at(m * nb + i, j);
        if (!solve(TrM, t, bb))
          throw std::logic_error("eta_ideal: trace form singular");
        g = f.K->elem(bb);
      }
      if (!(g == NFElem(0))) out.generators.push_back(g);
    }
  if (out.generators.empty())
    throw std::logic_error("eta_ideal: pairing degenerate on the eigenlattice");

  // The trace-recovered values land in the trace dual of Z[theta], which
  // differs from the order by its different (m'(theta)).  Rescale so the
  // ideal is measured in the order itself; for a rational Hecke field the
  // different is trivial and nothing changes.
  if (f.K) {
    NFElem dtheta = f.K->from_poly(to_qpoly(f.K->m.derivative()));
    for (NFElem& g : out.generators) g = g * dtheta;
  }

  // report window and valuations
  std::set<Int> ex;
  for (auto& [p, e] : factor(out.level)) ex.insert(p);
  for (long p : primes_up_to(f.weight)) ex.insert(Int(p));
  out.excluded.assign(ex.begin(), ex.end());

  std::set<Int> support;
  for (const NFElem& g : out.generators) {
    Rat nm = f.K ? f.K->norm(g) : g.rational();
    for (auto& [p, e] : factor(nm.get_num())) support.insert(p);
    for (auto& [p, e] : factor(nm.get_den())) support.insert(p);
  }
  for (const Int& ell : support) {
    if (ex.count(ell)) continue;
    if (!f.K) {
      long best = 0;
      bool first = true;
      for (const NFElem& g : out.generators) {
        long v = valuation(g.rational(), ell);
        best = first ? v : std::min(best, v);
        first = false;
      }
      if (best != 0) out.vals.emplace_back(ell, 0L, best);
      continue;
    }
    try {
      for (const PrimeIdeal& lam : f.K->primes_above(ell)) {
        long best = 0;
        bool first = true;
        for (const NFElem& g : out.generators) {
          long v = f.K->val(lam, g);
          best = first ? v : std::min(best, v);
          first = false;
        }
        if (best != 0) out.vals.emplace_back(ell, lam.index, best);
      }
    } catch (const std::domain_error&) {
      out.skipped.push_back(ell);  // equation-order index prime: no split here
    }
  }
  return out;
}

long eta_valuation(const EtaResult& eta, const Int& ell, long index) {
  for (auto& [l, i, v] : eta.vals)
    if (l == ell && i == index) return v;
  return 0;
}

ScalingCheck eta_scaling_check(const NewformRecord& f,
                               const std::vector<Int>& sigma, const Int& p,
                               long screen_bound) {
  for (const Int& q : sigma)
    if (q == p) throw std::domain_error("eta_scaling_check: p already in sigma");
  std::vector<Int> s1 = sigma;
  s1.push_back(p);
  std::sort(s1.begin(), s1.end());

  EtaResult e0 = eta_ideal(f, sigma);
  EtaResult e1 = eta_ideal(f, s1);

  ScalingCheck out;
  out.p = p;
  out.sigma = sigma;
  out.factor = naive_adjoint_inv(f, p);
  out.excluded = e1.excluded;  // the wider window: N^(Sigma+p) * k!

  BadPrimeReport screens = bad_prime_set(f, screen_bound);
  out.screens_low_confidence = screens.low_confidence;

  std::set<Int> ells;
  for (auto& [l, i, v] : e0.vals) ells.insert(l);
  for (auto& [l, i, v] : e1.vals) ells.insert(l);
  if (!(out.factor == NFElem(Rat(1)))) {
    Rat nm = f.K ? f.K->norm(out.factor) : out.factor.rational();
    for (auto& [q, e] : factor(nm.get_num())) ells.insert(q);
    for (auto& [q, e] : factor(nm.get_den())) ells.insert(q);
  }
  std::set<Int> ex(out.excluded.begin(), out.excluded.end());

  NFElem fac = out.factor;
  if (f.K && !fac.K) {
    std::vector<Rat> cc(f.K->deg, Rat(0));
    cc[0] = fac.rational();
    fac = f.K->elem(cc);
  }

  for (const Int& ell : ells) {
    if (ex.count(ell)) continue;
    auto add_row = [&](long index, long vfac) {
      ScalingRow row;
      row.ell = ell;
      row.index = index;
      row.v_base = eta_valuation(e0, ell, index);
      row.v_extended = eta_valuation(e1, ell, index);
      row.v_factor = vfac;
      row.pass = row.v_extended - row.v_base == row.v_factor;
      row.screened = bad_prime_contains_lambda(screens, ell, index);
      if (!row.screened && !row.pass) out.all_pass = false;
      out.rows.push_back(row);
    };
    if (!f.K) {
      long vfac = out.factor == NFElem(Rat(1))
                      ? 0
                      : valuation(out.factor.rational(), ell);
      add_row(0, vfac);
      continue;
    }
    for (const PrimeIdeal& lam : f.K->primes_above(ell)) {
      long vfac = out.factor == NFElem(Rat(1)) ? 0 : f.K->val(lam, fac);
      add_row(lam.index, vfac);
    }
  }
  return out;
}

Int congruence_module_order(const QSpace& sp,
                            const std::vector<NewformRecord>& recs,
                            size_t which) {
  if (which >= recs.size())
    throw std::domain_error("congruence_module_order: record index out of range");
  SymbolLattice lat = integral_lattices(sp);
  const Mat<Rat>& L = lat.cuspidal;

  // saturated sublattice of the lattice cut by a rational subspace, in the
  // coordinates of the integral cuspidal basis
  auto cut_lattice = [&](const Mat<Rat>& rows) {
    Mat<Rat> W = kernel(rows);
    return kernel_z(zmat_colscaled(matmul(L, W.transpose())).transpose());
  };

  ZMat nf = cut_lattice(matmul(recs[which].block, sp.cuspidal));
  Mat<Rat> rest(0, sp.dim);
  for (size_t r = 0; r < recs.size(); r++) {
    if (r == which) continue;
    Mat<Rat> rows = matmul(recs[r].block, sp.cuspidal);
    Mat<Rat> s(rest.nr + rows.nr, sp.dim);
    for (long i = 0; i < rest.nr; i++)
      for (long j = 0; j < sp.dim; j++) s.at(i, j) = rest.at(i, j);
    for (long i = 0; i < rows.nr; i++)
      for (long j = 0; j < sp.dim; j++) s.at(rest.nr + i, j) = rows.at(i, j);
    rest = s;
  }

  ZMat A(nf.nr + (rest.nr ? cut_lattice(rest).nr : 0), L.nr);
  {
    long at = 0;
    for (long i = 0; i < nf.nr; i++, at++)
      for (long j = 0; j < L.nr; j++) A.at(at, j) = nf.at(i, j);
    if (rest.nr) {
      ZMat ng = cut_lattice(rest);
      for (long i = 0; i < ng.nr; i++, at++)
        for (long j = 0; j < L.nr; j++) A.at(at, j) = ng.at(i, j);
    }
  }
  if (A.nr != A.nc)
    throw std::domain_error(
        "congruence_module_order: blocks do not fill the cuspidal space");
  QPoly cp = charpoly(to_qmat(A));
  Rat det = cp.c[0];
  if (A.nr % 2) det = -det;
  Int D = int_of(det);
  return D < 0 ? -D : D;
}

}  // namespace msadj
