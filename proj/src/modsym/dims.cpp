#include "modsym/dims.hpp"

#include <cassert>

namespace msadj {

Int gamma0_index(const Int& N) {
  Int mu = N;
  for (auto& [p, e] : factor(N)) {
    (void)e;
    mu = mu / p * (p + 1);
  }
  return mu;
}

Int gamma0_ncusps(const Int& N) {
  Int c = 0;
  for (const Int& d : divisors(N)) c += euler_phi(gcd(d, N / d));
  return c;
}

namespace {

// sum of chi(x) over solutions of f(x) = 0 mod N, where every solution has
// x^m = 1 so values land in mu_m; m is 4 for x^2+1 and 3 for x^2+x+1, making
// the total rational (solutions pair x with x^{-1}).
Rat elliptic_sum(const Int& N, const DirichletChar& chi, bool four) {
  Rat re(0);
  Rat w(0);  // coefficient of i (four) resp. omega and omega^2 folded (three)
  Rat w2(0);
  for (Int x = 0; x < N; x += 1) {
    Int v = four ? Int(x * x + 1) : Int(x * x + x + 1);
    if (mod(v, N) != 0) continue;
    auto c = chi.value_exponent(x);
    if (!c) continue;
    if (four) {
      if (*c == 0) re += 1;
      else if (*c == Rat(1, 2)) re -= 1;
      else if (*c == Rat(1, 4)) w += 1;
      else if (*c == Rat(3, 4)) w -= 1;
      else assert(false && "value at 4-torsion unit must be in mu_4");
    } else {
      if (*c == 0) re += 1;
      else if (*c == Rat(1, 3)) w += 1;
      else if (*c == Rat(2, 3)) w2 += 1;
      else assert(false && "value at 3-torsion unit must be in mu_3");
    }
  }
  if (four) {
    assert(w == 0);
    return re;
  }
  // a + b*omega + c*omega^2 with omega^2 = -1 - omega
  Rat a = re - w2, b = w - w2;
  assert(b == 0);
  return a;
}

}  // namespace

Int dim_cusp(const Int& N, long k, const DirichletChar& chi) {
  if (k < 2) throw usage_error("weight must be >= 2");
  if (chi.modulus() != N) throw usage_error("character modulus must equal the level");
  bool keven = (k % 2 == 0);
  if (chi.is_even() != keven) return 0;

  Rat dim = Rat(k - 1) * Rat(gamma0_index(N), 12);

  Int condN = chi.conductor();
  Rat lambda(1);
  for (auto& [p, r] : factor(N)) {
    long s = valuation(condN, p);
    Int lp;
    if (2 * s <= r) {
      if (r % 2 == 0)
        lp = pow(p, (unsigned long)(r / 2)) + pow(p, (unsigned long)(r / 2 - 1));
      else
        lp = 2 * pow(p, (unsigned long)((r - 1) / 2));
    } else {
      lp = 2 * pow(p, (unsigned long)(r - s));
    }
    lambda *= Rat(lp);
  }
  dim -= lambda / 2;

  Rat c4(0), c3(0);
  if (k % 4 == 0) c4 = Rat(1, 4);
  else if (k % 4 == 2) c4 = Rat(-1, 4);
  if (k % 3 == 0) c3 = Rat(1, 3);
  else if (k % 3 == 2) c3 = Rat(-1, 3);

  dim += c4 * elliptic_sum(N, chi, true);
  dim += c3 * elliptic_sum(N, chi, false);

  if (k == 2 && chi.is_trivial()) dim += 1;

  dim.canonicalize();
  if (dim.get_den() != 1) throw std::logic_error("cusp dimension did not come out integral");
  if (dim < 0) throw std::logic_error("cusp dimension negative");
  return dim.get_num();
}

Int dim_eis(const Int& N, long k, const DirichletChar& chi) {
  if (k < 2) throw usage_error("weight must be >= 2");
  if (chi.modulus() != N) throw usage_error("character modulus must equal the level");
  bool keven = (k % 2 == 0);
  if (chi.is_even() != keven) return 0;

  // pairs (chi1, chi2) of primitive characters mod (u1, u2), u1*u2 | N, with
  // chi1*chi2 inducing chi; each contributes one copy per divisor t of
  // N/(u1 u2), except the trivial pair at t=1 in weight 2.
  auto primitive_mod = [](const Int& u) {
    std::vector<DirichletChar> out;
    for (const Int& i : all_character_indices(u)) {
      DirichletChar c = DirichletChar::make(u, i);
      if (c.conductor() == u) out.push_back(std::move(c));
    }
    return out;
  };

  Int total = 0;
  for (const Int& u1 : divisors(N)) {
    for (const Int& u2 : divisors(N)) {
      if (mod(N, u1 * u2) != 0) continue;
      Int tcount = 0;
      for (const Int& t : divisors(N / (u1 * u2))) {
        (void)t;
        tcount += 1;
      }
      for (const auto& c1 : primitive_mod(u1)) {
        for (const auto& c2 : primitive_mod(u2)) {
          // match chi1*chi2 against chi on units modulo lcm of everything
          Int M = lcm(lcm(u1, u2), N);
          bool ok = true;
          for (Int a = 1; a <= M && ok; a += 1) {
            if (gcd(a, M) != 1) continue;
            Rat e = *c1.value_exponent(a) + *c2.value_exponent(a) - *chi.value_exponent(a);
            e.canonicalize();
            if (e.get_den() != 1) ok = false;
          }
          if (!ok) continue;
          Int add = tcount;
          if (k == 2 && c1.is_trivial() && c2.is_trivial() && u1 == 1 && u2 == 1) add -= 1;
          total += add;
        }
      }
    }
  }
  return total;
}

long sturm_bound(const Int& N, long k) {
  Int b = (Int(k) * gamma0_index(N) + 11) / 12;
  return b.get_si();
}

}  // namespace msadj
