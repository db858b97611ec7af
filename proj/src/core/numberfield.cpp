#include "core/numberfield.hpp"

#include <cassert>

namespace msadj {

bool NFElem::is_rational() const {
  if (!K) return true;
  for (size_t i = 1; i < c.size(); i++)
    if (c[i] != 0) return false;
  return true;
}

Rat NFElem::rational() const {
  if (!is_rational()) throw domain_error("NFElem: not rational");
  return c[0];
}

static void promote(const NFElem& a, const NFElem& b, const NumberField*& K,
                    std::vector<Rat>& ca, std::vector<Rat>& cb) {
  if (a.K && b.K && a.K != b.K) throw domain_error("NFElem: mixed fields");
  K = a.K ? a.K : b.K;
  size_t n = K ? (size_t)K->deg : 1;
  ca.assign(n, Rat(0));
  cb.assign(n, Rat(0));
  for (size_t i = 0; i < a.c.size(); i++) ca[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); i++) cb[i] = b.c[i];
}

NFElem NFElem::operator+(const NFElem& o) const {
  const NumberField* F;
  std::vector<Rat> x, y;
  promote(*this, o, F, x, y);
  for (size_t i = 0; i < x.size(); i++) x[i] += y[i];
  return NFElem(F, std::move(x));
}

NFElem NFElem::operator-(const NFElem& o) const {
  const NumberField* F;
  std::vector<Rat> x, y;
  promote(*this, o, F, x, y);
  for (size_t i = 0; i < x.size(); i++) x[i] -= y[i];
  return NFElem(F, std::move(x));
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& v : r.c) v = -v;
  return r;
}

NFElem NFElem::operator*(const NFElem& o) const {
  const NumberField* F;
  std::vector<Rat> x, y;
  promote(*this, o, F, x, y);
  if (!F) return NFElem(x[0] * y[0]);
  QPoly prod = QPoly(std::move(x)) * QPoly(std::move(y));
  return F->from_poly(prod);
}

NFElem NFElem::operator/(const NFElem& o) const {
  const NumberField* F;
  std::vector<Rat> x, y;
  promote(*this, o, F, x, y);
  if (!F) {
    if (y[0] == 0) throw domain_error("NFElem: division by zero");
    return NFElem(x[0] / y[0]);
  }
  QPoly B(std::move(y));
  if (B.is_zero()) throw domain_error("NFElem: division by zero");
  QPoly s, t;
  QPoly g = poly_gcdext(B, to_qpoly(F->m), s, t);
  if (g.deg() != 0) throw domain_error("NFElem: non-invertible");
  // s*B = g mod m, g constant 1 after normalization in poly_gcdext
  QPoly inv = s;
  return F->from_poly(QPoly(std::move(x)) * inv);
}

bool NFElem::operator==(const NFElem& o) const {
  const NumberField* F;
  std::vector<Rat> x, y;
  promote(*this, o, F, x, y);
  return x == y;
}

// ---------- NumberField ----------

static std::map<std::vector<Int>, std::unique_ptr<NumberField>>& registry() {
  static std::map<std::vector<Int>, std::unique_ptr<NumberField>> reg;
  return reg;
}

const NumberField* NumberField::get(const ZPoly& m) {
  if (m.deg() < 1 || m.lc() != 1) throw domain_error("NumberField: need monic");
  auto it = registry().find(m.c);
  if (it != registry().end()) return it->second.get();
  auto fac = factor_zpoly(m);
  if (fac.size() != 1 || fac[0].second != 1)
    throw domain_error("NumberField: polynomial not irreducible");
  auto K = std::make_unique<NumberField>();
  K->m = m;
  K->deg = m.deg();
  // Newton identities: p_j = Tr(theta^j)
  long d = K->deg;
  std::vector<Rat> p(2 * d, Rat(0));
  p[0] = d;
  auto a = [&](long i) { return i >= 0 && i <= d ? Rat(m.coeff(i)) : Rat(0); };
  for (long j = 1; j < 2 * d; j++) {
    Rat s(0);
    for (long i = 1; i < j && i <= d; i++) s += a(d - i) * p[j - i];
    if (j <= d)
      p[j] = -s - Rat(j) * a(d - j);
    else
      p[j] = -s;
  }
  K->basis_traces = std::move(p);
  auto* raw = K.get();
  registry()[m.c] = std::move(K);
  return raw;
}

const NumberField* NumberField::cyclotomic_field(long n) { return get(cyclotomic(n)); }

NFElem NumberField::elem(std::vector<Rat> c) const {
  c.resize(deg, Rat(0));
  return NFElem(this, std::move(c));
}

NFElem NumberField::theta() const {
  std::vector<Rat> c(deg, Rat(0));
  if (deg == 1) {
    // theta = root of linear m: x + a0 -> theta = -a0
    c[0] = Rat(-m.coeff(0));
  } else {
    c[1] = 1;
  }
  return NFElem(this, std::move(c));
}

NFElem NumberField::from_poly(const QPoly& f) const {
  QPoly r = poly_mod(f, to_qpoly(m));
  std::vector<Rat> c(deg, Rat(0));
  for (long i = 0; i <= r.deg(); i++) c[i] = r.c[i];
  return NFElem(this, std::move(c));
}

QPoly NumberField::rep_poly(const NFElem& a) const {
  std::vector<Rat> c = a.c;
  c.resize(deg, Rat(0));
  return QPoly(std::move(c));
}

Rat NumberField::trace(const NFElem& a) const {
  Rat s(0);
  for (size_t i = 0; i < a.c.size(); i++) s += a.c[i] * basis_traces[i];
  return s;
}

Rat NumberField::norm(const NFElem& a) const {
  QPoly A = rep_poly(a);
  if (A.is_zero()) return Rat(0);
  return resultant(to_qpoly(m), A);
}

std::vector<PrimeIdeal> NumberField::primes_above(const Int& ell) const {
  auto it = primes_cache.find(ell);
  if (it != primes_cache.end()) return it->second;
  if (!ell.fits_slong_p()) throw domain_error("primes_above: prime too large");
  long l = ell.get_si();
  auto fac = factor_mod_p(m, l);

  // Dedekind criterion: ell must not divide the index [O_K : Z[theta]].
  ZPoly g1 = ZPoly::constant(Int(1)), h1 = ZPoly::constant(Int(1));
  for (auto& [g, e] : fac) {
    g1 = g1 * g;
    for (long i = 1; i < e; i++) h1 = h1 * g;
  }
  ZPoly gh = g1 * h1 - m;
  ZPoly F;
  for (auto& v : gh.c) F.c.push_back(v / ell);  // exact: g1*h1 = m mod ell
  F.normalize();
  // gcd over F_ell of (F, g1, h1): nontrivial => index divisor
  {
    auto pmodl = [&](std::vector<long> a, std::vector<long> b) {
      auto norml = [&](std::vector<long>& v) {
        for (auto& x : v) x = ((x % l) + l) % l;
        while (!v.empty() && v.back() == 0) v.pop_back();
      };
      norml(a);
      norml(b);
      while (!b.empty()) {
        long binv;
        {  // modular inverse of lc(b)
          long t = 0, nt = 1, r = l, nr = b.back();
          while (nr != 0) {
            long q = r / nr;
            long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
          }
          binv = t < 0 ? t + l : t;
        }
        while (a.size() >= b.size() && !a.empty()) {
          long coef = (long)((__int128)a.back() * binv % l);
          size_t off = a.size() - b.size();
          for (size_t i = 0; i < b.size(); i++)
            a[off + i] = (long)(((a[off + i] - (__int128)coef * b[i]) % l + l) % l);
          norml(a);
        }
        std::swap(a, b);
      }
      return a;  // gcd (unnormalized)
    };
    auto tolv = [&](const ZPoly& f) {
      std::vector<long> v;
      for (auto& x : f.c) v.push_back(mod_l(x, l));
      while (!v.empty() && v.back() == 0) v.pop_back();
      return v;
    };
    std::vector<long> g = pmodl(tolv(F), tolv(g1));
    g = pmodl(g, tolv(h1));
    if (g.size() > 1)
      throw domain_error("primes_above: index divisor at ell=" + ell.get_str());
  }

  std::vector<PrimeIdeal> out;
  long idx = 0;
  for (auto& [g, e] : fac) {
    PrimeIdeal P;
    P.ell = ell;
    P.index = idx++;
    P.e = e;
    P.f = g.deg();
    P.gbar = g;
    out.push_back(P);
  }
  primes_cache[ell] = out;
  return out;
}

long NumberField::val(const PrimeIdeal& lam, const NFElem& a) const {
  if (a.K && a.K != this) throw domain_error("val: element of different field");
  QPoly A = rep_poly(a.K ? a : NFElem(this, std::vector<Rat>{a.c[0]}));
  if (A.is_zero()) throw domain_error("val: zero element");
  Int den = 1;
  ZPoly Ai = to_zpoly(A, &den);
  long vden = valuation(den, lam.ell);

  auto fac = primes_above(lam.ell);
  // single prime above ell: the group factor is m itself, resultant exact
  long vres;
  if (fac.size() == 1) {
    Rat r = resultant(to_qpoly(m), to_qpoly(Ai));
    vres = valuation(r, lam.ell);
  } else {
    long B = 64;
    auto key = std::make_pair(lam.ell, lam.index);
    for (;;) {
      ZPoly G;
      auto itc = lift_cache.find(key);
      if (itc != lift_cache.end() && itc->second.second >= B) {
        G = itc->second.first;
        B = itc->second.second;
      } else {
        // lift group factors gbar_i^{e_i} of m
        std::vector<ZPoly> groups;
        for (auto& P2 : fac) {
          ZPoly gg = ZPoly::constant(Int(1));
          for (long i = 0; i < P2.e; i++) gg = gg * P2.gbar;
          // reduce mod ell
          for (auto& v : gg.c) v = mod(v, lam.ell);
          gg.normalize();
          groups.push_back(gg);
        }
        Int target = pow(lam.ell, (unsigned long)B);
        auto lifted = hensel_lift(m, groups, lam.ell.get_si(), target);
        for (size_t i = 0; i < fac.size(); i++)
          lift_cache[std::make_pair(lam.ell, fac[i].index)] = {lifted[i], B};
        G = lifted[lam.index];
      }
      Rat r = resultant(to_qpoly(G), to_qpoly(Ai));
      if (r == 0) {
        B *= 2;
        if (B > 4096) throw precision_error("val: lift precision exhausted");
        continue;
      }
      vres = valuation(r, lam.ell);
      if (vres >= B - 4) {
        B *= 2;
        if (B > 4096) throw precision_error("val: lift precision exhausted");
        continue;
      }
      break;
    }
  }
  if (vres % lam.f != 0) throw domain_error("val: resultant valuation not divisible by f");
  return vres / lam.f - lam.e * vden;
}

}  // namespace msadj
