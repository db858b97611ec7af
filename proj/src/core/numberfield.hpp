#pragma once
// Number fields K = Q[x]/(m) for monic integer m, elements in the power basis,
// primes above a rational prime, lambda-adic valuations in the equation order.

#include <map>
#include <memory>

#include "core/poly.hpp"

namespace msadj {

struct NumberField;

// Scalar that is either a plain rational (field == nullptr) or an element of a
// NumberField. Rationals promote automatically, so Mat<NFElem>/Poly<NFElem> work.
struct NFElem {
  const NumberField* K = nullptr;
  std::vector<Rat> c;  // size 1 when K == nullptr, else deg(K)

  NFElem() : c{Rat(0)} {}
  NFElem(long v) : c{Rat(v)} {}
  NFElem(const Rat& v) : c{v} {}
  NFElem(const NumberField* field, std::vector<Rat> cc) : K(field), c(std::move(cc)) {}

  bool is_rational() const;
  Rat rational() const;  // throws if not rational

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator/(const NFElem& o) const;
  NFElem operator-() const;
  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  bool operator==(const NFElem& o) const;
  bool operator!=(const NFElem& o) const { return !(*this == o); }
};

struct PrimeIdeal {
  Int ell;
  long index;  // position in the deterministic primes_above ordering
  long e, f;
  ZPoly gbar;  // irreducible factor of m mod ell (monic, lifted coeffs in [0, ell))
};

struct NumberField {
  ZPoly m;  // monic, irreducible over Q, integer coefficients
  long deg;
  std::vector<Rat> basis_traces;  // Tr(theta^i), i < 2*deg (for trace form)

  static const NumberField* get(const ZPoly& m);  // interned; checks monic+irreducible
  static const NumberField* cyclotomic_field(long n);

  NFElem elem(std::vector<Rat> c) const;
  NFElem theta() const;
  NFElem from_poly(const QPoly& f) const;  // f(theta)

  Rat trace(const NFElem& a) const;
  Rat norm(const NFElem& a) const;
  QPoly rep_poly(const NFElem& a) const;

  // Primes above ell in the equation order Z[theta]; throws domain_error if ell
  // divides the index [O_K : Z[theta]] (detected by the Dedekind criterion).
  std::vector<PrimeIdeal> primes_above(const Int& ell) const;

  // v_lambda(a) for nonzero a.
  long val(const PrimeIdeal& lam, const NFElem& a) const;

 private:
  mutable std::map<Int, std::vector<PrimeIdeal>> primes_cache;
  mutable std::map<std::pair<Int, long>, std::pair<ZPoly, long>> lift_cache;  // (ell,idx) -> (G, B)
};

// ---- NFElem free helpers ----
inline NFElem operator*(const Rat& s, const NFElem& a) { return NFElem(s) * a; }

}  // namespace msadj
