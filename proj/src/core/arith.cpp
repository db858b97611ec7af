#include "core/arith.hpp"

#include <algorithm>

namespace msadj {

static Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedul);
  for (;;) {
    Int c = rng.get_z_range(n - 3) + 1;
    Int x = rng.get_z_range(n - 2) + 2, y = x, d = 1;
    auto f = [&](const Int& v) { return mod(v * v + c, n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      if (x == y) break;
      d = gcd(abs(x - y), n);
    }
    if (d != 1 && d != n) return d;
  }
}

std::vector<std::pair<Int, long>> factor(Int n) {
  if (n < 0) n = -n;
  if (n <= 1) return {};
  std::vector<Int> stack{n}, primes;
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      primes.push_back(m);
      continue;
    }
    // trial division first; rho for anything that survives
    bool split = false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
      if (m % p == 0) {
        stack.push_back(p);
        stack.push_back(m / p);
        split = true;
        break;
      }
    }
    if (!split) {
      Int d = pollard_rho(m);
      stack.push_back(d);
      stack.push_back(m / d);
    }
  }
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, long>> out;
  for (auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      out.back().second++;
    else
      out.push_back({p, 1});
  }
  return out;
}

long primitive_root(const Int& pe) {
  if (pe == 2) return 1;
  if (pe == 4) return 3;
  auto fac = factor(pe);
  if (fac.size() != 1 || fac[0].first == 2) throw domain_error("primitive_root: need odd prime power");
  Int p = fac[0].first;
  Int phi = euler_phi(pe);
  auto qs = factor(phi);
  for (long g = 2;; g++) {
    if (mod(Int(g), p) == 0) continue;
    bool ok = true;
    for (auto& [q, e] : qs) {
      (void)e;
      if (powmod(g, phi / q, pe) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

}  // namespace msadj
