#include "modsym/space.hpp"

#include <cassert>
#include <map>
#include <numeric>

namespace msadj {

M22 sl2_lift_bottom(const Int& c0, const Int& d0, const Int& N) {
  if (N == 1) return M22::id();
  Int c = mod(c0, N), d = mod(d0, N);
  Int cc = c, dd = d;
  if (cc == 0) cc = N;
  while (gcd(cc, dd) != 1) dd += N;
  Int u, v;
  Int g = gcdext(dd, cc, u, v);  // u*dd + v*cc = 1
  assert(g == 1);
  return M22(u, -v, cc, dd);
}

M22 sl2_lift_diag(const Int& u, const Int& v, const Int& N) {
  if (N == 1) return M22::id();
  if (mod(u * v, N) != 1) throw domain_error("sl2_lift_diag: uv != 1 mod N");
  M22 M = sl2_lift_bottom(Int(0), v, N);
  // top row is == (u, b) mod N with some b; shift by t * bottom row to kill b
  Int t = mod(-M.b * invmod(mod(M.d, N), N).value(), N);
  M.a += t * M.c;
  M.b += t * M.d;
  assert(M.det() == 1);
  return M;
}

M22 sl2_complete_column(const Int& p, const Int& q) {
  Int u, v;
  Int g = gcdext(p, q, u, v);  // u*p + v*q = 1
  if (g != 1) throw domain_error("sl2_complete_column: vector not primitive");
  return M22(p, -v, q, u);
}

template <class F>
std::vector<F> rho_poly(const M22& h, const std::vector<F>& P) {
  long m = (long)P.size() - 1;
  if (m == 0) return P;
  // (rho(h)P)(X,Y) = P(dX - bY, -cX + aY)
  // pow1[i] = (dX - bY)^i, pow2[i] = (-cX + aY)^i as Int coefficient rows
  std::vector<std::vector<Int>> pow1(m + 1), pow2(m + 1);
  pow1[0] = {Int(1)};
  pow2[0] = {Int(1)};
  for (long i = 1; i <= m; i++) {
    pow1[i].assign(i + 1, Int(0));
    pow2[i].assign(i + 1, Int(0));
    for (long s = 0; s < i; s++) {
      // multiply pow[i-1] by (dX - bY): X contributes shift s+1, Y stays
      pow1[i][s + 1] += h.d * pow1[i - 1][s];
      pow1[i][s] += -h.b * pow1[i - 1][s];
      pow2[i][s + 1] += -h.c * pow2[i - 1][s];
      pow2[i][s] += h.a * pow2[i - 1][s];
    }
  }
  std::vector<F> out(m + 1, F(0));
  for (long i = 0; i <= m; i++) {
    if (P[i] == F(0)) continue;
    const auto& A = pow1[i];
    const auto& B = pow2[m - i];
    for (long s = 0; s <= i; s++) {
      if (A[s] == 0) continue;
      for (long t = 0; t <= m - i; t++) {
        if (B[t] == 0) continue;
        out[s + t] += P[i] * F(Rat(A[s] * B[t]));
      }
    }
  }
  return out;
}

void P1::build(const Int& N_) {
  N = N_;
  if (N < 1 || N > 1000000) throw domain_error("level out of range");
  n = N.get_si();
  reps.clear();
  lifts.clear();
  table.assign(n * n, -1);
  if (n == 1) {
    reps.push_back({0, 0});
    lifts.push_back(M22::id());
    table[0] = 0;
    return;
  }
  std::vector<long> units;
  for (long u = 1; u < n; u++)
    if (std::gcd(u, n) == 1) units.push_back(u);
  for (long c = 0; c < n; c++) {
    for (long d = 0; d < n; d++) {
      if (table[c * n + d] != -1) continue;
      if (std::gcd(std::gcd(c, d), n) != 1) continue;
      long bc = c, bd = d;
      long idx = (long)reps.size();
      for (long u : units) {
        long uc = (u * c) % n, ud = (u * d) % n;
        table[uc * n + ud] = idx;
        if (uc < bc || (uc == bc && ud < bd)) {
          bc = uc;
          bd = ud;
        }
      }
      reps.push_back({bc, bd});
      lifts.push_back(sl2_lift_bottom(Int(bc), Int(bd), N));
    }
  }
}

long P1::index(const Int& c, const Int& d) const {
  long cc = mod(c, N).get_si(), dd = mod(d, N).get_si();
  long idx = table[cc * n + dd];
  if (idx < 0) throw domain_error("P1::index: pair not coprime to level");
  return idx;
}

namespace {

template <class F>
F char_value(const DirichletChar& chi, const NumberField* K, const Int& a);
template <>
Rat char_value<Rat>(const DirichletChar& chi, const NumberField*, const Int& a) {
  return chi.value_rat(a);
}
template <>
NFElem char_value<NFElem>(const DirichletChar& chi, const NumberField* K, const Int& a) {
  return chi.value_nf(a, K);
}

}  // namespace

template <class F>
ManinSpace<F>::ManinSpace(const Int& N_, long k_, const DirichletChar& chi_)
    : N(N_), k(k_), m(k_ - 2), chi(chi_) {
  if (k < 2) throw usage_error("weight must be >= 2");
  if (chi.modulus() != N) throw usage_error("character modulus must equal the level");
  long ord = chi.order();
  if (ord > 2) {
    if constexpr (std::is_same_v<F, Rat>)
      throw domain_error("character of order > 2 needs cyclotomic coefficients");
    Kchi = NumberField::cyclotomic_field(ord);
  }
  p1.build(N);
  long n = p1.n;
  psi_table.assign(n, F(0));
  for (long a = 0; a < n; a++) {
    if (std::gcd(a, n) != 1 && n > 1) continue;
    psi_table[a] = char_value<F>(chi, Kchi, Int(a));
  }
  ngen = p1.size() * (m + 1);
  bool mEven = (m % 2 == 0);
  collapsed = (chi.is_even() != mEven);
  if (collapsed) {
    dim = 0;
    gen2basis = Mat<F>(ngen, 0);
    boundary_gens = Mat<F>(0, ngen);
    boundary_basis = Mat<F>(0, 0);
    cuspidal = Mat<F>(0, 0);
    return;
  }
  build_space();
  build_boundary();
}

template <class F>
F ManinSpace<F>::chi_val(const Int& a) const {
  return psi_table[mod(a, N).get_si()];
}

template <class F>
void ManinSpace<F>::build_space() {
  // weighted union-find: gen_v = wt[v] * gen_parent[v]
  std::vector<long> parent(ngen);
  std::vector<F> wt(ngen, F(1));
  std::vector<char> is_zero(ngen, 0);
  for (long i = 0; i < ngen; i++) parent[i] = i;

  auto find = [&](long v) -> std::pair<long, F> {
    // collect path, then compress
    std::vector<long> path;
    while (parent[v] != v) {
      path.push_back(v);
      v = parent[v];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (parent[*it] != v) {
        wt[*it] = wt[*it] * wt[parent[*it]];
        parent[*it] = v;
      }
    }
    F w = F(1);
    if (!path.empty()) w = wt[path.front()];
    return {v, w};
  };
  auto unite = [&](long a, long b, const F& c) {
    // gen_a = c * gen_b
    auto [ra, wa] = find(a);
    auto [rb, wb] = find(b);
    if (ra == rb) {
      if (!(wa == c * wb)) is_zero[ra] = 1;
      return;
    }
    parent[ra] = rb;
    wt[ra] = c * wb / wa;
    if (is_zero[ra]) is_zero[rb] = 1;
  };

  // resolve a unimodular matrix to (class, witness twist)
  auto resolve = [&](const M22& g) -> std::pair<long, F> {
    long cls = p1.index(g.c, g.d);
    const M22& g0 = p1.lifts[cls];
    Int dgam = g.d * g0.a - g.c * g0.b;
    return {cls, chi_val(dgam)};
  };

  const M22 sigma(0, -1, 1, 0);
  const M22 tau(0, -1, 1, -1);
  const M22 tau2 = tau * tau;

  // two-term gluing
  for (long cls = 0; cls < p1.size(); cls++) {
    const M22& g0 = p1.lifts[cls];
    auto [ycls, t] = resolve(g0 * sigma);
    for (long i = 0; i <= m; i++) {
      // M(g0, X^i Y^(m-i)) + t * (-1)^i M(lift(y), X^(m-i) Y^i) = 0
      F c = (i % 2 == 0) ? t : -t;
      unite(gen_id(cls, i), gen_id(ycls, m - i), -c);
    }
  }

  // three-term relations over the glued generators
  std::vector<long> rootpos(ngen, -1);
  std::vector<long> roots;
  for (long v = 0; v < ngen; v++) {
    auto [r, w] = find(v);
    (void)w;
    if (rootpos[r] < 0 && !is_zero[r]) {
      rootpos[r] = (long)roots.size();
      roots.push_back(r);
    }
  }
  long nred = (long)roots.size();
  Mat<F> R(ngen, nred);
  for (long cls = 0; cls < p1.size(); cls++) {
    const M22& g0 = p1.lifts[cls];
    auto [y1, t1] = resolve(g0 * tau);
    auto [y2, t2] = resolve(g0 * tau2);
    for (long i = 0; i <= m; i++) {
      long rowi = gen_id(cls, i);
      auto add = [&](long genid, const F& coeff) {
        auto [r, w] = find(genid);
        if (is_zero[r]) return;
        R.at(rowi, rootpos[r]) += coeff * w;
      };
      std::vector<F> Q(m + 1, F(0));
      Q[i] = F(1);
      add(gen_id(cls, i), F(1));
      std::vector<F> P1v = rho_poly(tau.adj(), Q);
      for (long l = 0; l <= m; l++)
        if (!(P1v[l] == F(0))) add(gen_id(y1, l), t1 * P1v[l]);
      std::vector<F> P2v = rho_poly(tau2.adj(), Q);
      for (long l = 0; l <= m; l++)
        if (!(P2v[l] == F(0))) add(gen_id(y2, l), t2 * P2v[l]);
    }
  }

  auto pivots = rref(R);
  std::vector<int> is_piv(nred, 0);
  std::vector<long> pivrow(nred, -1);
  for (size_t pi = 0; pi < pivots.size(); pi++) {
    is_piv[pivots[pi]] = 1;
    pivrow[pivots[pi]] = (long)pi;
  }
  std::vector<long> freecols;
  std::vector<long> colbasis(nred, -1);
  for (long c = 0; c < nred; c++)
    if (!is_piv[c]) {
      colbasis[c] = (long)freecols.size();
      freecols.push_back(c);
    }
  dim = (long)freecols.size();
  basis_gens.clear();
  for (long c : freecols) basis_gens.push_back(roots[c]);

  gen2basis = Mat<F>(ngen, dim);
  for (long v = 0; v < ngen; v++) {
    auto [r, w] = find(v);
    if (is_zero[r]) continue;
    long c = rootpos[r];
    if (c < 0) continue;
    if (!is_piv[c]) {
      gen2basis.at(v, colbasis[c]) = w;
    } else {
      long pr = pivrow[c];
      for (long fc : freecols)
        if (!(R.at(pr, fc) == F(0))) gen2basis.at(v, colbasis[fc]) -= w * R.at(pr, fc);
    }
  }
}

template <class F>
std::pair<long, F> ManinSpace<F>::cusp_class(const Int& p, const Int& q) {
  for (size_t idx = 0; idx < cusp_reps.size(); idx++) {
    const M22& g1 = cusp_completions[idx];
    M22 A = sl2_complete_column(p, q);
    M22 B = g1.adj();
    M22 AB = A * B;
    // gamma(n) = A T^n B maps the stored rep to (p, q); lower-left is c0 + n c1
    Int c0 = AB.c, c1 = A.c * B.c;
    Int c1m = mod(c1, N), c0m = mod(c0, N);
    Int n0;
    bool found = false;
    if (c1m == 0) {
      if (c0m == 0) {
        n0 = 0;
        found = true;
      }
    } else {
      Int g = gcd(c1m, N);
      if (mod(c0m, g) == 0) {
        Int Ng = N / g;
        n0 = mod(-(c0m / g) * invmod(mod(c1m / g, Ng), Ng).value(), Ng);
        found = true;
      }
    }
    if (!found) continue;
    Int dval = AB.d + n0 * A.c * B.d;
    return {(long)idx, chi_val(dval)};
  }
  // new class; check for character-irregularity of the stabilizer
  long idx = (long)cusp_reps.size();
  cusp_reps.push_back({p, q});
  cusp_completions.push_back(sl2_complete_column(p, q));
  bool alive = true;
  // stabilizing family gamma(n) = I + n*(-pq, p^2; -q^2, pq), need N | n q^2
  Int step = N / gcd(mod(q * q, N), N);
  if (mod(q * q, N) == 0) step = 1;
  for (Int j = 0; j < N; j += 1) {
    Int dval = 1 + j * step * p * q;
    if (!(chi_val(dval) == F(1))) {
      alive = false;
      break;
    }
  }
  cusp_alive.push_back(alive);
  return {idx, F(1)};
}

template <class F>
void ManinSpace<F>::build_boundary() {
  std::vector<std::map<long, F>> cols(ngen);  // per-gen boundary as class -> coeff
  for (long cls = 0; cls < p1.size(); cls++) {
    const M22& g0 = p1.lifts[cls];
    for (long i = 0; i <= m; i++) {
      long v = gen_id(cls, i);
      if (i == m) {
        auto [ci, tw] = cusp_class(g0.a, g0.c);
        cols[v][ci] += tw;
      }
      if (i == 0) {
        auto [ci, tw] = cusp_class(g0.b, g0.d);
        cols[v][ci] -= tw;
      }
    }
  }
  long nall = (long)cusp_reps.size();
  std::vector<long> newidx(nall, -1);
  std::vector<std::array<Int, 2>> live;
  for (long i = 0; i < nall; i++)
    if (cusp_alive[i]) {
      newidx[i] = (long)live.size();
      live.push_back(cusp_reps[i]);
    }
  ncusp = (long)live.size();
  cusp_reps = live;
  boundary_gens = Mat<F>(ncusp, ngen);
  for (long v = 0; v < ngen; v++)
    for (auto& [ci, coeff] : cols[v])
      if (newidx[ci] >= 0) boundary_gens.at(newidx[ci], v) += coeff;
  boundary_basis = Mat<F>(ncusp, dim);
  for (long bi = 0; bi < dim; bi++)
    for (long r = 0; r < ncusp; r++) boundary_basis.at(r, bi) = boundary_gens.at(r, basis_gens[bi]);
  cuspidal = kernel(boundary_basis);
}

template <class F>
std::vector<F> ManinSpace<F>::project(const M22& g, const std::vector<F>& Q) const {
  std::vector<F> res(dim, F(0));
  if (collapsed) return res;
  long cls = p1.index(g.c, g.d);
  const M22& g0 = p1.lifts[cls];
  F t = chi_val(g.d * g0.a - g.c * g0.b);
  for (long i = 0; i <= m; i++) {
    if (Q[i] == F(0)) continue;
    F c = t * Q[i];
    long v = gen_id(cls, i);
    for (long j = 0; j < dim; j++)
      if (!(gen2basis.at(v, j) == F(0))) res[j] += c * gen2basis.at(v, j);
  }
  return res;
}

template <class F>
std::vector<F> ManinSpace<F>::mop(Int a, Int c, const std::vector<F>& P) const {
  std::vector<F> res(dim, F(0));
  if (collapsed) return res;
  if (c < 0) {
    a = -a;
    c = -c;
  }
  if (c == 0) return res;
  Int g = gcd(a, c);
  a /= g;
  c /= g;
  // continued fraction {infinity -> a/c} through convergents
  Int pm1 = 1, qm1 = 0;  // p_{-1}/q_{-1}
  Int pm2 = 0, qm2 = 1;  // p_{-2}/q_{-2}
  long j = 0;
  while (c != 0) {
    Int a0, r;
    mpz_fdiv_qr(a0.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    Int pj = a0 * pm1 + pm2, qj = a0 * qm1 + qm2;
    Int s = (j % 2 == 0) ? -1 : 1;
    M22 h(s * pj, pm1, s * qj, qm1);
    assert(h.det() == 1);
    std::vector<F> PP = rho_poly(h.adj(), P);
    std::vector<F> pr = project(h, PP);
    for (long t = 0; t < dim; t++) res[t] += pr[t];
    pm2 = pm1;
    qm2 = qm1;
    pm1 = pj;
    qm1 = qj;
    a = c;
    c = r;
    j++;
  }
  return res;
}

template <class F>
std::vector<F> ManinSpace<F>::path_symbol(const M22& h, const std::vector<F>& P) const {
  std::vector<F> res = mop(h.a, h.c, P);
  std::vector<F> lo = mop(h.b, h.d, P);
  for (long t = 0; t < dim; t++) res[t] -= lo[t];
  return res;
}

template <class F>
Mat<F> ManinSpace<F>::hecke(const Int& p) const {
  if (!is_prime(p)) throw usage_error("hecke index must be prime here");
  Mat<F> T(dim, dim);
  for (long bi = 0; bi < dim; bi++) {
    long v = basis_gens[bi];
    long cls = v / (m + 1), i = v % (m + 1);
    const M22& g0 = p1.lifts[cls];
    std::vector<F> Q(m + 1, F(0));
    Q[i] = F(1);
    std::vector<F> img(dim, F(0));
    for (Int j = 0; j < p; j += 1) {
      M22 h = M22(1, j, 0, p) * g0;
      std::vector<F> P = rho_poly(h, Q);
      std::vector<F> part = path_symbol(h, P);
      for (long t = 0; t < dim; t++) img[t] += part[t];
    }
    if (mod(N, p) != 0) {
      M22 h = M22(p, 0, 0, 1) * g0;
      std::vector<F> P = rho_poly(h, Q);
      std::vector<F> part = path_symbol(h, P);
      F w = chi_val(p);
      for (long t = 0; t < dim; t++) img[t] += w * part[t];
    }
    for (long t = 0; t < dim; t++) T.at(t, bi) = img[t];
  }
  return T;
}

template <class F>
Mat<F> ManinSpace<F>::atkin_lehner() const {
  Mat<F> W(dim, dim);
  M22 w(0, -1, N, 0);
  for (long bi = 0; bi < dim; bi++) {
    long v = basis_gens[bi];
    long cls = v / (m + 1), i = v % (m + 1);
    const M22& g0 = p1.lifts[cls];
    std::vector<F> Q(m + 1, F(0));
    Q[i] = F(1);
    M22 h = w * g0;
    std::vector<F> P = rho_poly(h, Q);
    std::vector<F> img = path_symbol(h, P);
    for (long t = 0; t < dim; t++) W.at(t, bi) = img[t];
  }
  return W;
}

template <class F>
Mat<F> ManinSpace<F>::star() const {
  Mat<F> S(dim, dim);
  for (long bi = 0; bi < dim; bi++) {
    long v = basis_gens[bi];
    long cls = v / (m + 1), i = v % (m + 1);
    const M22& g0 = p1.lifts[cls];
    M22 gj(g0.a, -g0.b, -g0.c, g0.d);  // J g J with J = diag(-1, 1)
    std::vector<F> Q(m + 1, F(0));
    Q[i] = ((m - i) % 2 == 0) ? F(1) : F(-1);  // rho(J) X^i Y^(m-i)
    std::vector<F> img = project(gj, Q);
    for (long t = 0; t < dim; t++) S.at(t, bi) = img[t];
  }
  return S;
}

template struct ManinSpace<Rat>;
template struct ManinSpace<NFElem>;
template std::vector<Rat> rho_poly<Rat>(const M22&, const std::vector<Rat>&);
template std::vector<NFElem> rho_poly<NFElem>(const M22&, const std::vector<NFElem>&);

}  // namespace msadj
