#pragma once
// Exact integer/rational arithmetic helpers on top of GMP.

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msadj {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// g = gcd(a,b) = s*a + t*b
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int mod(const Int& a, const Int& m) {  // representative in [0, m)
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline long mod_l(const Int& a, long m) {
  Int r = mod(a, Int(m));
  return r.get_si();
}

inline Int powmod(const Int& b, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::optional<Int> invmod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

inline Int pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rat pow(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  Rat r;
  unsigned long ae = (unsigned long)(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), ae);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), ae);
  r.canonicalize();
  if (e < 0) {
    if (r == 0) throw std::domain_error("0^negative");
    r = 1 / r;
  }
  return r;
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;  // deterministic for our sizes in practice
}

inline Int next_prime(const Int& n) {
  Int r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (long i = 2; i <= bound; i++) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (long j = 2 * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

// v_p(n); n != 0.
inline long valuation(Int n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of 0");
  long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    n = q;
    v++;
  }
}

inline long valuation(const Rat& x, const Int& p) {
  if (x == 0) throw std::domain_error("valuation of 0");
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

// prime -> exponent, ascending.
std::vector<std::pair<Int, long>> factor(Int n);

inline Int euler_phi(const Int& n) {
  Int r = 1;
  for (auto& [p, e] : factor(n)) r *= pow(p, (unsigned long)(e - 1)) * (p - 1);
  return r;
}

inline std::vector<Int> divisors(const Int& n) {
  std::vector<Int> ds{1};
  for (auto& [p, e] : factor(n)) {
    size_t base = ds.size();
    Int pk = 1;
    for (long i = 1; i <= e; i++) {
      pk *= p;
      for (size_t j = 0; j < base; j++) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Smallest primitive root mod p^e (p odd prime) or mod 2,4.
long primitive_root(const Int& pe);

// CRT: x = a (mod m), x = b (mod n) with gcd(m,n)=1; returns rep mod mn.
inline Int crt(const Int& a, const Int& m, const Int& b, const Int& n) {
  Int s, t;
  Int g = gcdext(m, n, s, t);
  if (g != 1) throw std::domain_error("crt: moduli not coprime");
  return mod(a + m * mod(s * (b - a), n), m * n);
}

inline int kronecker(const Int& a, const Int& b) {
  return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

struct usage_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct domain_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct precision_error : std::runtime_error { using std::runtime_error::runtime_error; };

}  // namespace msadj
