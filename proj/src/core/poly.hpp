#pragma once
// Dense univariate polynomials over an exact field (or ring), ascending coefficients.

#include <vector>

#include "core/arith.hpp"

namespace msadj {

template <class F>
struct Poly {
  std::vector<F> c;  // c[i] * x^i; normalized: empty or c.back() != 0

  Poly() = default;
  explicit Poly(std::vector<F> cc) : c(std::move(cc)) { normalize(); }
  static Poly constant(const F& v) { return Poly(std::vector<F>{v}); }
  static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }

  void normalize() {
    while (!c.empty() && c.back() == F(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long deg() const { return (long)c.size() - 1; }  // deg(0) = -1
  const F& lc() const { return c.back(); }
  F coeff(long i) const { return (i >= 0 && i < (long)c.size()) ? c[i] : F(0); }

  bool operator==(const Poly& o) const { return c == o.c; }

  Poly operator+(const Poly& o) const {
    std::vector<F> r(std::max(c.size(), o.c.size()), F(0));
    for (size_t i = 0; i < c.size(); i++) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); i++) r[i] += o.c[i];
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<F> r(std::max(c.size(), o.c.size()), F(0));
    for (size_t i = 0; i < c.size(); i++) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); i++) r[i] -= o.c[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<F> r(c.size() + o.c.size() - 1, F(0));
    for (size_t i = 0; i < c.size(); i++)
      for (size_t j = 0; j < o.c.size(); j++) r[i + j] += c[i] * o.c[j];
    return Poly(std::move(r));
  }
  Poly operator*(const F& s) const {
    Poly r = *this;
    for (auto& v : r.c) v = v * s;
    r.normalize();
    return r;
  }

  template <class T>
  T eval(const T& x) const {
    T r(0);
    for (long i = deg(); i >= 0; i--) r = r * x + T(c[i]);
    return r;
  }

  Poly derivative() const {
    if (deg() <= 0) return Poly();
    std::vector<F> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); i++) r[i - 1] = c[i] * F((long)i);
    return Poly(std::move(r));
  }

  Poly shift_up(long n) const {  // * x^n
    if (is_zero()) return Poly();
    std::vector<F> r(c.size() + n, F(0));
    for (size_t i = 0; i < c.size(); i++) r[i + n] = c[i];
    return Poly(std::move(r));
  }
};

// Division with remainder over a field: a = q*b + r, deg r < deg b.
template <class F>
void divrem(const Poly<F>& a, const Poly<F>& b, Poly<F>& q, Poly<F>& r) {
  if (b.is_zero()) throw domain_error("poly division by zero");
  r = a;
  q = Poly<F>();
  q.c.assign(std::max<long>(a.deg() - b.deg() + 1, 0), F(0));
  while (!r.is_zero() && r.deg() >= b.deg()) {
    F t = r.lc() / b.lc();
    long d = r.deg() - b.deg();
    q.c[d] = t;
    for (long i = 0; i <= b.deg(); i++) r.c[i + d] -= t * b.c[i];
    r.normalize();
  }
  q.normalize();
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> q, r;
  divrem(a, b, q, r);
  return r;
}

template <class F>
Poly<F> monic(const Poly<F>& a) {
  if (a.is_zero()) return a;
  return a * (F(1) / a.lc());
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return monic(a);
}

// g = gcd = s*a + t*b
template <class F>
Poly<F> poly_gcdext(const Poly<F>& a, const Poly<F>& b, Poly<F>& s, Poly<F>& t) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    Poly<F> q, r;
    divrem(r0, r1, q, r);
    r0 = r1; r1 = r;
    Poly<F> ns = s0 - q * s1; s0 = s1; s1 = ns;
    Poly<F> nt = t0 - q * t1; t0 = t1; t1 = nt;
  }
  if (!r0.is_zero()) {
    F inv = F(1) / r0.lc();
    r0 = r0 * inv; s0 = s0 * inv; t0 = t0 * inv;
  }
  s = s0; t = t0;
  return r0;
}

using QPoly = Poly<Rat>;
using ZPoly = Poly<Int>;

inline ZPoly to_zpoly(const QPoly& f, Int* denom_out = nullptr) {
  Int d = 1;
  for (auto& v : f.c) d = lcm(d, v.get_den());
  std::vector<Int> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); i++) {
    Rat v = f.c[i] * Rat(d);
    c[i] = v.get_num();
  }
  if (denom_out) *denom_out = d;
  return ZPoly(std::move(c));
}

inline QPoly to_qpoly(const ZPoly& f) {
  std::vector<Rat> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); i++) c[i] = Rat(f.c[i]);
  return QPoly(std::move(c));
}

inline Int content(const ZPoly& f) {
  Int g = 0;
  for (auto& v : f.c) g = gcd(g, v);
  return g;
}

// Resultant over a field via the Euclidean remainder sequence.
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
  if (a.is_zero() || b.is_zero()) return F(0);
  F res(1);
  bool neg = false;
  while (b.deg() > 0) {
    Poly<F> r = poly_mod(a, b);
    long da = a.deg(), db = b.deg(), dr = r.is_zero() ? -1 : r.deg();
    if (r.is_zero()) return F(0);
    // res(a,b) = (-1)^(da*db) * lc(b)^(da-dr) * res(b,r)
    if ((da % 2) && (db % 2)) neg = !neg;
    F l = b.lc();
    F pw(1);
    for (long i = 0; i < da - dr; i++) pw = pw * l;
    res = res * pw;
    a = b;
    b = r;
  }
  // deg b == 0: res(a, const) = const^deg(a)
  F pw(1);
  for (long i = 0; i < a.deg(); i++) pw = pw * b.c[0];
  res = res * pw;
  return neg ? -res : res;
}

// Irreducible factors (with multiplicity) of a nonzero integer polynomial,
// content dropped. Deterministic output order: by (degree, coeff lex).
std::vector<std::pair<ZPoly, long>> factor_zpoly(const ZPoly& f);

// Monic irreducible factors of f mod p with multiplicities (p odd prime not
// dividing lc(f)); deterministic order, coefficients lifted to [0, p).
std::vector<std::pair<ZPoly, long>> factor_mod_p(const ZPoly& f, long p);

// Lift pairwise-coprime monic factors of monic f from mod p to mod ptarget.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ZPoly>& factors_mod_p,
                               long p, const Int& ptarget);

// n-th cyclotomic polynomial.
ZPoly cyclotomic(long n);

}  // namespace msadj
