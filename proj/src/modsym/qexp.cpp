#include "modsym/qexp.hpp"

#include <cassert>

namespace msadj {

namespace {

// truncated series as coefficient vectors indexed by exponent, size n+1
using Ser = std::vector<Int>;

Ser one(long n) {
  Ser s(n + 1, Int(0));
  s[0] = 1;
  return s;
}

void mul_sparse(Ser& s, const std::vector<std::pair<long, Int>>& factor_terms) {
  long n = (long)s.size() - 1;
  Ser out(n + 1, Int(0));
  for (const auto& [e, c] : factor_terms) {
    if (e > n) break;
    for (long i = 0; i + e <= n; ++i) {
      if (s[i] != 0) out[i + e] += c * s[i];
    }
  }
  s.swap(out);
}

Ser mul(const Ser& a, const Ser& b) {
  long n = (long)a.size() - 1;
  Ser out(n + 1, Int(0));
  for (long i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= n; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::vector<Int> eta_product(const std::vector<std::pair<long, long>>& drs, long n) {
  long pre = 0;
  for (auto& [d, r] : drs) pre += d * r;
  assert(pre % 24 == 0);
  pre /= 24;
  // product of (1 - q^{dm})^r for all m >= 1, truncated at q^(n - pre)
  long cut = n - pre;
  assert(cut >= 0);
  Ser s = one(cut);
  for (auto& [d, r] : drs) {
    assert(r > 0);
    for (long m = 1; d * m <= cut; ++m) {
      // (1 - q^{dm})^r expanded by binomials
      std::vector<std::pair<long, Int>> terms;
      Int binom = 1;
      for (long j = 0; j <= r && (long)(d * m) * j <= cut; ++j) {
        terms.emplace_back(d * m * j, (j % 2 == 0) ? binom : -binom);
        binom = binom * (r - j) / (j + 1);
      }
      mul_sparse(s, terms);
    }
  }
  std::vector<Int> a(n + 1, Int(0));
  for (long i = 0; i <= cut; ++i) a[i + pre] = s[i];
  a[0] = 0;  // slot 0 unused by convention
  return a;
}

std::vector<Int> qexp_delta(long n) { return eta_product({{1, 24}}, n); }

std::vector<Int> qexp_delta_eisenstein(long n) {
  auto sigma = [&](long m, long k) {
    Int s = 0;
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) s += pow(Int(d), (unsigned long)k);
    return s;
  };
  Ser e4 = one(n), e6 = one(n);
  for (long m = 1; m <= n; ++m) {
    e4[m] = 240 * sigma(m, 3);
    e6[m] = -504 * sigma(m, 5);
  }
  Ser d = mul(mul(e4, e4), e4);
  Ser e62 = mul(e6, e6);
  std::vector<Int> a(n + 1, Int(0));
  for (long m = 1; m <= n; ++m) {
    Int num = d[m] - e62[m];
    assert(num % 1728 == 0);
    a[m] = num / 1728;
  }
  return a;
}

std::vector<Int> qexp_11a(long n) { return eta_product({{1, 2}, {11, 2}}, n); }

std::vector<Int> qexp_5w4(long n) { return eta_product({{1, 4}, {5, 4}}, n); }

}  // namespace msadj
