// Factorization in Z[x]: Cantor-Zassenhaus mod p, Hensel lifting, subset recombination.

#include <algorithm>
#include <functional>
#include <map>

#include "core/poly.hpp"

namespace msadj {

namespace {

// --- arithmetic in F_p[x], p an odd machine prime, coefficients in [0,p) ---
struct PPoly {
  long p;
  std::vector<long> c;
  void norm() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  long deg() const { return (long)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
};

long pinv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

PPoly pmul(const PPoly& a, const PPoly& b) {
  if (a.is_zero() || b.is_zero()) return {a.p, {}};
  std::vector<long> r(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); i++)
    for (size_t j = 0; j < b.c.size(); j++) r[i + j] = (r[i + j] + (__int128)a.c[i] * b.c[j]) % a.p;
  PPoly out{a.p, std::move(r)};
  out.norm();
  return out;
}

PPoly psub(const PPoly& a, const PPoly& b) {
  std::vector<long> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); i++) r[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); i++) r[i] = (r[i] - b.c[i] % a.p + a.p) % a.p;
  PPoly out{a.p, std::move(r)};
  out.norm();
  return out;
}

void pdivrem(const PPoly& a, const PPoly& b, PPoly& q, PPoly& r) {
  r = a;
  q = {a.p, {}};
  q.c.assign(std::max<long>(a.deg() - b.deg() + 1, 0), 0);
  long binv = pinv(b.c.back(), a.p);
  while (!r.is_zero() && r.deg() >= b.deg()) {
    long t = (__int128)r.c.back() * binv % a.p;
    long d = r.deg() - b.deg();
    q.c[d] = t;
    for (long i = 0; i <= b.deg(); i++)
      r.c[i + d] = (r.c[i + d] - (__int128)t * b.c[i] % a.p + a.p) % a.p;
    r.norm();
  }
  PPoly tmp = q;
  tmp.norm();
  q = tmp;
}

PPoly pmod(const PPoly& a, const PPoly& b) {
  PPoly q, r;
  pdivrem(a, b, q, r);
  return r;
}

PPoly pmonic(PPoly a) {
  if (a.is_zero()) return a;
  long inv = pinv(a.c.back(), a.p);
  for (auto& v : a.c) v = (__int128)v * inv % a.p;
  return a;
}

PPoly pgcd(PPoly a, PPoly b) {
  while (!b.is_zero()) {
    PPoly r = pmod(a, b);
    a = b;
    b = r;
  }
  return pmonic(a);
}

PPoly ppowmod(PPoly base, Int e, const PPoly& m) {
  PPoly r{base.p, {1}};
  base = pmod(base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmod(pmul(r, base), m);
    base = pmod(pmul(base, base), m);
    e >>= 1;
  }
  return r;
}

PPoly pderiv(const PPoly& a) {
  PPoly r{a.p, {}};
  if (a.deg() <= 0) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); i++) r.c[i - 1] = (long)(i % a.p) * a.c[i] % a.p;
  r.norm();
  return r;
}

// Cantor-Zassenhaus: factor squarefree monic f over F_p (p odd).
void cz_factor(const PPoly& f, std::vector<PPoly>& out, gmp_randclass& rng) {
  long p = f.p;
  // distinct-degree split
  std::vector<std::pair<PPoly, long>> dd;  // (product of irreducible deg-d factors, d)
  PPoly rem = pmonic(f);
  PPoly xq = {p, {0, 1}};
  for (long d = 1; rem.deg() >= 2 * d; d++) {
    xq = ppowmod(xq, Int(p), rem);  // x^(p^d) mod rem  (recompute relative to current rem)
    PPoly sub = xq;
    if (sub.c.size() < 2) sub.c.resize(2, 0);
    sub.c[1] = (sub.c[1] - 1 + p) % p;  // x^(p^d) - x
    sub.norm();
    PPoly g = pgcd(rem, sub);
    if (g.deg() > 0) {
      dd.push_back({g, d});
      PPoly q, r;
      pdivrem(rem, g, q, r);
      rem = pmonic(q);
      xq = pmod(xq, rem);
    }
  }
  if (rem.deg() > 0) dd.push_back({rem, rem.deg()});
  // equal-degree split
  for (auto& [prod, d] : dd) {
    std::vector<PPoly> work{prod};
    while (!work.empty()) {
      PPoly g = work.back();
      work.pop_back();
      if (g.deg() == d) {
        out.push_back(pmonic(g));
        continue;
      }
      Int excount = (pow(Int(p), (unsigned long)d) - 1) / 2;
      for (;;) {
        PPoly r{p, {}};
        r.c.resize(g.deg());
        for (auto& v : r.c) v = Int(rng.get_z_range(p)).get_si();
        r.norm();
        if (r.deg() < 1) continue;
        PPoly h = ppowmod(r, excount, g);
        if (h.c.empty())
          continue;
        h.c[0] = (h.c[0] - 1 + p) % p;  // r^((p^d-1)/2) - 1
        h.norm();
        PPoly w = pgcd(g, h);
        if (w.deg() > 0 && w.deg() < g.deg()) {
          PPoly q, rr;
          pdivrem(g, w, q, rr);
          work.push_back(pmonic(q));
          work.push_back(w);
          break;
        }
      }
    }
  }
}

ZPoly lift_centered(const PPoly& a, const Int& m) {
  std::vector<Int> c(a.c.size());
  for (size_t i = 0; i < a.c.size(); i++) {
    Int v(a.c[i]);
    c[i] = v;
  }
  (void)m;
  return ZPoly(std::move(c));
}

ZPoly zmod_centered(const ZPoly& a, const Int& m) {
  std::vector<Int> c(a.c.size());
  for (size_t i = 0; i < a.c.size(); i++) {
    Int v = mod(a.c[i], m);
    if (2 * v >= m) v -= m;
    c[i] = v;
  }
  return ZPoly(std::move(c));
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r = a * b;
  for (auto& v : r.c) v = mod(v, m);
  r.normalize();
  return r;
}

// divide a by monic b modulo m
void zdivrem_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
  r = a;
  for (auto& v : r.c) v = mod(v, m);
  r.normalize();
  q = ZPoly();
  q.c.assign(std::max<long>(a.deg() - b.deg() + 1, 0), Int(0));
  while (!r.is_zero() && r.deg() >= b.deg()) {
    Int t = r.lc();
    long d = r.deg() - b.deg();
    q.c[d] = t;
    for (long i = 0; i <= b.deg(); i++) r.c[i + d] = mod(r.c[i + d] - t * b.c[i], m);
    r.normalize();
  }
  q.normalize();
}

// Hensel: f = g*h mod p (monic f,g,h), lift to f = G*H mod p^target.
void hensel2(const ZPoly& f, ZPoly g, ZPoly h, long p, const Int& ptarget, ZPoly& G, ZPoly& H) {
  // Bezout s*g + t*h = 1 mod p
  PPoly gp{p, {}}, hp{p, {}};
  for (auto& v : g.c) gp.c.push_back(mod_l(v, p));
  for (auto& v : h.c) hp.c.push_back(mod_l(v, p));
  gp.norm();
  hp.norm();
  // extended euclid over F_p
  PPoly r0 = gp, r1 = hp, s0{p, {1}}, s1{p, {}}, t0{p, {}}, t1{p, {1}};
  while (!r1.is_zero()) {
    PPoly q, r;
    pdivrem(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    PPoly ns = psub(s0, pmul(q, s1));
    s0 = s1;
    s1 = ns;
    PPoly nt = psub(t0, pmul(q, t1));
    t0 = t1;
    t1 = nt;
  }
  if (r0.deg() != 0) throw domain_error("hensel: factors not coprime mod p");
  long inv = pinv(r0.c[0], p);
  for (auto& v : s0.c) v = (__int128)v * inv % p;
  for (auto& v : t0.c) v = (__int128)v * inv % p;
  ZPoly S = lift_centered(s0, Int(p)), T = lift_centered(t0, Int(p));

  Int q(p);
  while (q < ptarget) {
    Int q2 = q * q;
    if (q2 > ptarget) q2 = ptarget;  // cap; arithmetic mod q2 still valid lifting mod q2
    // e = f - g*h mod q2
    ZPoly e = f - g * h;
    for (auto& v : e.c) v = mod(v, q2);
    e.normalize();
    // g' = g + T*e mod g-ish: standard: write  e = q*(...)  implicit; use full formulas:
    // d = S*e mod h ; g' = g + e*T + g*floor? -- use classical:
    //   g* = g + (T*e mod g)?? We follow von zur Gathen Alg 15.10 shape:
    ZPoly se = zmul_mod(S, e, q2);
    ZPoly qq, rr;
    zdivrem_monic_mod(se, h, q2, qq, rr);  // se = qq*h + rr
    ZPoly gnew = g + zmul_mod(T, e, q2) + zmul_mod(qq, g, q2);
    for (auto& v : gnew.c) v = mod(v, q2);
    gnew.normalize();
    ZPoly hnew = h + rr;
    for (auto& v : hnew.c) v = mod(v, q2);
    hnew.normalize();
    // fix monicity: hnew, gnew should stay monic of the same degrees
    g = gnew;
    h = hnew;
    // lift Bezout: b = S*g + T*h - 1 mod q2
    ZPoly b = zmul_mod(S, g, q2) + zmul_mod(T, h, q2);
    if (b.c.empty()) b.c.push_back(Int(0));
    b.c[0] = mod(b.c[0] - 1, q2);
    b.normalize();
    ZPoly sb = zmul_mod(S, b, q2);
    ZPoly qq2, rr2;
    zdivrem_monic_mod(sb, h, q2, qq2, rr2);
    ZPoly Snew = S - rr2;
    for (auto& v : Snew.c) v = mod(v, q2);
    Snew.normalize();
    ZPoly Tnew = T - zmul_mod(T, b, q2) - zmul_mod(qq2, g, q2);
    for (auto& v : Tnew.c) v = mod(v, q2);
    Tnew.normalize();
    S = Snew;
    T = Tnew;
    q = q2;
  }
  G = g;
  H = h;
}

// lift the full list: f monic = prod(fac) mod p  ->  mod ptarget
std::vector<ZPoly> hensel_list(const ZPoly& f, std::vector<PPoly> fac, long p, const Int& ptarget) {
  if (fac.size() == 1) {
    ZPoly g = f;  // single factor: it's f itself mod ptarget
    return {zmod_centered(g, ptarget)};
  }
  size_t half = fac.size() / 2;
  PPoly gleft{p, {1}};
  for (size_t i = 0; i < half; i++) gleft = pmul(gleft, fac[i]);
  PPoly gright{p, {1}};
  for (size_t i = half; i < fac.size(); i++) gright = pmul(gright, fac[i]);
  ZPoly G, H;
  hensel2(f, lift_centered(gleft, Int(p)), lift_centered(gright, Int(p)), p, ptarget, G, H);
  std::vector<PPoly> lf(fac.begin(), fac.begin() + half), rf(fac.begin() + half, fac.end());
  auto L = hensel_list(G, lf, p, ptarget);
  auto R = hensel_list(H, rf, p, ptarget);
  L.insert(L.end(), R.begin(), R.end());
  return L;
}

Int max_abs_coeff(const ZPoly& f) {
  Int m = 0;
  for (auto& v : f.c)
    if (abs(v) > m) m = abs(v);
  return m;
}

// Factor a primitive squarefree polynomial (deg >= 1) over Z.
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  if (f.deg() == 1) return {f};
  // choose prime
  long p = 3;
  PPoly fp{0, {}};
  for (;; p = (long)next_prime(Int(p)).get_si()) {
    if (mod(f.lc(), Int(p)) == 0) continue;
    fp = PPoly{p, {}};
    for (auto& v : f.c) fp.c.push_back(mod_l(v, p));
    fp.norm();
    if (pgcd(fp, pderiv(fp)).deg() == 0) break;
  }
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEul);
  std::vector<PPoly> pf;
  cz_factor(pmonic(fp), pf, rng);
  if (pf.size() == 1) return {f};
  std::sort(pf.begin(), pf.end(), [](const PPoly& a, const PPoly& b) { return a.c < b.c; });

  // Landau-Mignotte: |coeff of any factor| <= 2^deg * |f|_2-ish; use crude bound
  Int B = max_abs_coeff(f);
  B = B * pow(Int(2), (unsigned long)(f.deg() + 3)) * abs(f.lc());
  Int ptarget(p);
  while (ptarget <= 2 * B) ptarget *= p;

  // work with monic version mod ptarget: fm = f / lc  scaled trick: factor lc*f(x) as monic in disguise.
  // Simpler: require monic input for Hensel; handle non-monic via y = lc*x substitution.
  Int lc = f.lc();
  ZPoly fm;  // monic companion: lc^(d-1) f(x/lc)
  {
    long d = f.deg();
    fm.c.assign(d + 1, Int(0));
    Int pw = 1;
    for (long i = d; i >= 0; i--) {
      fm.c[i] = f.c[i] * pw;  // coefficient of x^i gets lc^(d-i)/lc adjust below
      if (i > 0) pw *= lc;
    }
    // now fm(x) = lc^(d-1) * f(x / lc) which is monic with integer coefficients
  }
  std::vector<PPoly> pfm;
  {
    PPoly t{p, {}};
    for (auto& v : fm.c) t.c.push_back(mod_l(v, p));
    t.norm();
    gmp_randclass rng2(gmp_randinit_default);
    rng2.seed(0xC0FFEEul);
    cz_factor(pmonic(t), pfm, rng2);
    std::sort(pfm.begin(), pfm.end(), [](const PPoly& a, const PPoly& b) { return a.c < b.c; });
  }
  auto lifted = hensel_list(zmod_centered(fm, ptarget), pfm, p, ptarget);

  // recombination against fm (monic), then undo substitution on each found factor.
  std::vector<ZPoly> result;
  std::vector<int> used(lifted.size(), 0);
  ZPoly rem = fm;
  auto try_subset = [&](const std::vector<size_t>& idx) -> bool {
    ZPoly g = ZPoly::constant(Int(1));
    for (size_t i : idx) g = zmul_mod(g, lifted[i], ptarget);
    g = zmod_centered(g, ptarget);
    // test divisibility over Z
    QPoly q, r;
    divrem(to_qpoly(rem), to_qpoly(g), q, r);
    if (!r.is_zero()) return false;
    Int den = 1;
    ZPoly qz = to_zpoly(q, &den);
    if (den != 1) return false;
    result.push_back(g);
    rem = qz;
    for (size_t i : idx) used[i] = 1;
    return true;
  };
  // subsets by increasing size
  size_t n = lifted.size();
  for (size_t sz = 1; sz <= n; sz++) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      std::vector<size_t> avail;
      for (size_t i = 0; i < n; i++)
        if (!used[i]) avail.push_back(i);
      if (avail.size() < sz) break;
      if (avail.size() == sz) {
        try_subset(avail);
        progressed = false;
        break;
      }
      std::vector<size_t> comb(sz);
      std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t depth) -> bool {
        if (depth == sz) return try_subset(comb);
        for (size_t i = start; i < avail.size(); i++) {
          comb[depth] = avail[i];
          if (rec(i + 1, depth + 1)) return true;
        }
        return false;
      };
      if (rec(0, 0)) progressed = true;
    }
  }
  if (rem.deg() > 0) result.push_back(rem);

  // undo substitution: factor g(x) of fm corresponds to primitive part of g(lc * x)
  std::vector<ZPoly> out;
  for (auto& g : result) {
    ZPoly h;
    h.c.assign(g.c.size(), Int(0));
    Int pw = 1;
    for (long i = 0; i <= g.deg(); i++) {
      h.c[i] = g.c[i] * pw;
      pw *= lc;
    }
    h.normalize();
    Int cont = content(h);
    if (h.lc() < 0) cont = -cont;
    for (auto& v : h.c) v /= cont;
    out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<std::pair<ZPoly, long>> factor_zpoly(const ZPoly& f0) {
  if (f0.is_zero()) throw domain_error("factor of zero polynomial");
  ZPoly f = f0;
  Int cont = content(f);
  if (f.lc() < 0) cont = -cont;
  for (auto& v : f.c) v /= cont;
  std::vector<std::pair<ZPoly, long>> out;
  if (f.deg() == 0) return out;

  // squarefree decomposition: f = prod_i sf_i^i  (Yun over Q, cleared)
  QPoly a = to_qpoly(f);
  QPoly d = a.derivative();
  QPoly g = poly_gcd(a, d);
  std::vector<QPoly> sf;  // sf[i] = squarefree part with multiplicity i+1
  if (g.deg() == 0) {
    sf.push_back(a);
  } else {
    QPoly w, q, r;
    divrem(a, g, w, r);
    QPoly y, r2;
    divrem(d, g, y, r2);
    QPoly z = y - w.derivative();
    while (!w.is_zero() && w.deg() > 0) {
      QPoly gi = poly_gcd(w, z);
      sf.push_back(gi);
      QPoly wn, rn;
      divrem(w, gi, wn, rn);
      QPoly zn, rz;
      divrem(z, gi, zn, rz);
      z = zn - wn.derivative();
      w = wn;
    }
  }
  for (size_t i = 0; i < sf.size(); i++) {
    if (sf[i].deg() < 1) continue;
    ZPoly zi = to_zpoly(sf[i]);
    Int ci = content(zi);
    if (zi.lc() < 0) ci = -ci;
    for (auto& v : zi.c) v /= ci;
    for (auto& g2 : factor_squarefree(zi)) out.push_back({g2, (long)i + 1});
  }
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
    if (x.first.deg() != y.first.deg()) return x.first.deg() < y.first.deg();
    return x.first.c < y.first.c;
  });
  return out;
}

std::vector<std::pair<ZPoly, long>> factor_mod_p(const ZPoly& f, long p) {
  PPoly fp{p, {}};
  for (auto& v : f.c) fp.c.push_back(mod_l(v, p));
  fp.norm();
  if (fp.is_zero() || mod(f.lc(), Int(p)) == 0)
    throw domain_error("factor_mod_p: lc divisible by p");
  fp = pmonic(fp);

  // collect distinct irreducible factors (handles non-squarefree input)
  std::function<std::vector<PPoly>(PPoly)> distinct = [&](PPoly g) -> std::vector<PPoly> {
    std::vector<PPoly> out;
    if (g.deg() < 1) return out;
    PPoly gp = pderiv(g);
    if (gp.is_zero()) {
      // g = h(x^p); over F_p the coefficients are fixed by Frobenius
      PPoly h{p, {}};
      for (long i = 0; i * p <= g.deg(); i++) h.c.push_back(g.c[i * p]);
      h.norm();
      return distinct(h);
    }
    PPoly d = pgcd(g, gp);
    PPoly w, r;
    pdivrem(g, d, w, r);
    w = pmonic(w);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xFACADEul);
    std::vector<PPoly> irr;
    if (w.deg() > 0) cz_factor(w, irr, rng);
    if (d.deg() > 0)
      for (auto& q : distinct(pmonic(d))) irr.push_back(q);
    // dedupe
    std::sort(irr.begin(), irr.end(), [](const PPoly& a, const PPoly& b) { return a.c < b.c; });
    irr.erase(std::unique(irr.begin(), irr.end(),
                          [](const PPoly& a, const PPoly& b) { return a.c == b.c; }),
              irr.end());
    return irr;
  };
  std::vector<PPoly> irr = distinct(fp);
  std::sort(irr.begin(), irr.end(), [](const PPoly& a, const PPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.c < b.c;
  });
  std::vector<std::pair<ZPoly, long>> out;
  for (auto& g : irr) {
    long mult = 0;
    PPoly rem = fp;
    for (;;) {
      PPoly q, r;
      pdivrem(rem, g, q, r);
      if (!r.is_zero()) break;
      mult++;
      rem = q;
    }
    ZPoly gz;
    for (auto& v : g.c) gz.c.push_back(Int(v));
    gz.normalize();
    out.push_back({gz, mult});
  }
  return out;
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ZPoly>& factors_mod_p,
                               long p, const Int& ptarget) {
  std::vector<PPoly> fac;
  for (auto& g : factors_mod_p) {
    PPoly gp{p, {}};
    for (auto& v : g.c) gp.c.push_back(mod_l(v, p));
    gp.norm();
    fac.push_back(gp);
  }
  ZPoly fm = f;
  for (auto& v : fm.c) v = mod(v, ptarget);
  fm.normalize();
  auto lifted = hensel_list(fm, fac, p, ptarget);
  for (auto& g : lifted) {
    for (auto& v : g.c) v = mod(v, ptarget);
    g.normalize();
  }
  return lifted;
}

ZPoly cyclotomic(long n) {
  static std::map<long, ZPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 / prod_{d|n, d<n} Phi_d
  std::vector<Int> xn(n + 1, Int(0));
  xn[0] = -1;
  xn[n] = 1;
  QPoly f = to_qpoly(ZPoly(std::move(xn)));
  for (long d = 1; d < n; d++) {
    if (n % d != 0) continue;
    QPoly q, r;
    divrem(f, to_qpoly(cyclotomic(d)), q, r);
    if (!r.is_zero()) throw domain_error("cyclotomic internal");
    f = q;
  }
  ZPoly out = to_zpoly(f);
  cache[n] = out;
  return out;
}

}  // namespace msadj
