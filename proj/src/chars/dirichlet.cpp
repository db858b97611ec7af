#include "chars/dirichlet.hpp"

#include <algorithm>
#include <stdexcept>

namespace msadj {

namespace {

bool is_primitive_root(const Int& g, const Int& q) {
  Int ph = euler_phi(q);
  if (gcd(g, q) != 1) return false;
  for (auto& [p, e] : factor(ph)) {
    (void)e;
    if (powmod(g, ph / p, q) == 1) return false;
  }
  return true;
}

// Smallest g that generates (Z/p^e)^* for every e >= 1 (primitive root mod p^2
// suffices and is necessary for p^2, hence the standard pairing generator).
Int conrey_generator(const Int& p) {
  for (Int g = 2;; g += 1) {
    if (g % p == 0) continue;
    if (is_primitive_root(g, p * p)) return g;
  }
}

Int dlog_brute(const Int& a, const Int& g, const Int& ordg, const Int& q) {
  Int x = 1, aa = mod(a, q);
  for (Int i = 0; i < ordg; i += 1) {
    if (x == aa) return i;
    x = mod(x * g, q);
  }
  throw domain_error("dlog: element not in cyclic part");
}

// a =~ (-1)^s 5^t mod 2^e (e >= 3); returns {s, t}
std::pair<Int, Int> two_adic_coords(const Int& a, long e, const Int& q) {
  Int ord5 = q / 4;  // 2^(e-2)
  Int x = 1, aa = mod(a, q);
  for (Int t = 0; t < ord5; t += 1) {
    if (x == aa) return {0, t};
    if (mod(q - x, q) == aa) return {1, t};
    x = mod(x * 5, q);
  }
  throw domain_error("two_adic_coords: not a unit");
}

}  // namespace

DirichletChar DirichletChar::make(const Int& modulus, const Int& conrey_index) {
  if (modulus < 1) throw usage_error("character modulus must be positive");
  Int idx = conrey_index;
  if (modulus == 1) {
    if (idx != 1) throw usage_error("bad character index for modulus 1");
  } else {
    if (idx < 1 || idx > modulus || gcd(idx, modulus) != 1)
      throw usage_error("character index must be a unit in [1, modulus]");
  }
  DirichletChar chi;
  chi.N = modulus;
  chi.index = idx;
  for (auto& [p, e] : factor(modulus)) {
    CharFactor f;
    f.p = p;
    f.e = e;
    f.q = pow(p, (unsigned long)e);
    Int ip = mod(idx, f.q);
    if (p == 2) {
      if (e == 1) {
        // trivial group, nothing to record
      } else if (e == 2) {
        f.ordgen = 1;
        f.expo_minus1 = (ip == 3) ? 1 : 0;
      } else {
        f.ordgen = f.q / 4;
        auto [s, t] = two_adic_coords(ip, e, f.q);
        f.expo_minus1 = s;
        f.expo5 = t;
      }
    } else {
      f.gen = conrey_generator(p);
      f.ordgen = euler_phi(f.q);
      f.expo = dlog_brute(ip, f.gen, f.ordgen, f.q);
    }
    chi.factors.push_back(std::move(f));
  }
  return chi;
}

DirichletChar DirichletChar::from_label(const std::string& label) {
  auto dot = label.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= label.size())
    throw usage_error("character label must look like 'N.i'");
  auto numeric = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  std::string sN = label.substr(0, dot), si = label.substr(dot + 1);
  if (!numeric(sN) || !numeric(si)) throw usage_error("character label must look like 'N.i'");
  return make(Int(sN), Int(si));
}

std::optional<Rat> DirichletChar::value_exponent(const Int& a) const {
  if (gcd(a, N) != 1) return std::nullopt;
  Rat c(0);
  for (const auto& f : factors) {
    Int ap = mod(a, f.q);
    if (f.p == 2) {
      if (f.e == 1) continue;
      if (f.e == 2) {
        if (ap == 3) c += Rat(f.expo_minus1, 2);
      } else {
        auto [s, t] = two_adic_coords(ap, f.e, f.q);
        c += Rat(f.expo_minus1 * s, 2) + Rat(f.expo5 * t, f.ordgen);
      }
    } else {
      Int x = dlog_brute(ap, f.gen, f.ordgen, f.q);
      c += Rat(f.expo * x, f.ordgen);
    }
  }
  c.canonicalize();
  // reduce to [0,1)
  Int fl = c.get_num() / c.get_den();
  if (c < 0) fl -= 1;
  c -= Rat(fl);
  c.canonicalize();
  return c;
}

long DirichletChar::order() const {
  Int ord = 1;
  auto add = [&](const Int& n, const Int& ex) {
    Int o = n / gcd(n, mod(ex, n));
    ord = lcm(ord, o);
  };
  for (const auto& f : factors) {
    if (f.p == 2) {
      if (f.e >= 2) add(2, f.expo_minus1);
      if (f.e >= 3) add(f.ordgen, f.expo5);
    } else {
      add(f.ordgen, f.expo);
    }
  }
  return ord.get_si();
}

Int DirichletChar::conductor() const {
  for (const Int& M : divisors(N)) {
    bool ok = true;
    for (Int a = 1; a < N + 1 && ok; a += 1) {
      if (gcd(a, N) != 1) continue;
      if (mod(a, M) != mod(Int(1), M)) continue;
      auto c = value_exponent(a);
      if (*c != 0) ok = false;
    }
    if (ok) return M;
  }
  throw std::logic_error("conductor: unreachable");
}

bool DirichletChar::is_even() const {
  if (N <= 2) return true;
  return *value_exponent(N - 1) == 0;
}

Rat DirichletChar::value_rat(const Int& a) const {
  auto c = value_exponent(a);
  if (!c) return Rat(0);
  if (*c == 0) return Rat(1);
  if (*c == Rat(1, 2)) return Rat(-1);
  throw domain_error("character value is not rational");
}

NFElem DirichletChar::value_nf(const Int& a, const NumberField* K) const {
  if (K == nullptr) return NFElem(value_rat(a));
  auto c = value_exponent(a);
  if (!c) return NFElem(Rat(0));
  long ord = order();
  // c = k/d with d | ord; value = theta^(k * ord/d), theta = primitive ord-th root
  Int d = c->get_den(), k = c->get_num();
  if (mod(Int(ord), d) != 0) throw std::logic_error("character order mismatch");
  Int ee = mod(k * (Int(ord) / d), Int(ord));
  NFElem v{Rat(1)};
  NFElem th = K->theta();
  for (Int i = 0; i < ee; i += 1) v = v * th;
  return v;
}

CBall DirichletChar::gauss_sum(mpfr_prec_t prec) const {
  CBall s = CBall::exact(Rat(0), Rat(0), prec);
  for (Int a = 1; a <= N; a += 1) {
    auto c = value_exponent(a);
    if (!c) continue;
    Rat t = *c + Rat(a, N);
    s = s + cis_2pi(t, prec);
  }
  return s;
}

bool DirichletChar::same_primitive(const DirichletChar& other) const {
  Int c1 = conductor(), c2 = other.conductor();
  if (c1 != c2) return false;
  // value of the primitive character at a coprime to cond: shift a by multiples
  // of cond until coprime to the full modulus.
  auto prim_val = [](const DirichletChar& chi, const Int& cond, const Int& a) {
    Int aa = a;
    while (gcd(aa, chi.modulus()) != 1) aa += cond;
    return *chi.value_exponent(aa);
  };
  for (Int a = 1; a <= c1; a += 1) {
    if (gcd(a, c1) != 1) continue;
    if (prim_val(*this, c1, a) != prim_val(other, c1, a)) return false;
  }
  return true;
}

std::vector<Int> all_character_indices(const Int& M) {
  std::vector<Int> out;
  if (M == 1) return {Int(1)};
  for (Int i = 1; i <= M; i += 1)
    if (gcd(i, M) == 1) out.push_back(i);
  return out;
}

}  // namespace msadj
