#include "congruence/badprimes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace msadj {

std::vector<Int> dihedral_window(long k) {
  if (k < 2) throw std::domain_error("dihedral_window: weight below 2");
  Int m(2 * (k - 1));
  std::set<Int> out;
  for (const Int& d : divisors(m)) {
    if (is_prime(d)) out.insert(d);          // ell | 2(k-1)
    if (is_prime(d + 1)) out.insert(d + 1);  // (ell-1) | 2(k-1)
    if (d > 2 && is_prime(d - 1)) out.insert(d - 1);  // (ell+1) | 2(k-1)
  }
  return std::vector<Int>(out.begin(), out.end());
}

namespace {

std::string join_qs(const std::vector<Int>& qs) {
  std::ostringstream os;
  for (size_t i = 0; i < qs.size(); i++) os << (i ? ", " : "") << qs[i].get_str();
  return os.str();
}

}  // namespace

BadPrimeReport bad_prime_set(const NewformRecord& f, long bound) {
  BadPrimeReport r;
  r.level = f.level;
  r.weight = f.weight;
  r.bound = bound;

  std::set<Int> div_ex;
  for (auto& [p, e] : factor(f.level)) div_ex.insert(p);
  for (long p : primes_up_to(f.weight)) div_ex.insert(Int(p));
  r.divisor_exclusions.assign(div_ex.begin(), div_ex.end());

  // Eisenstein scan: witnesses w_q = a_q - q^(k-1) - 1 over admissible q
  std::vector<std::pair<Int, NFElem>> wits;
  for (auto& [q, aq] : f.ap) {
    if (q > bound || mod(f.level, q) == 0) continue;
    if (f.level != 1 && mod(q, f.level) != 1) continue;
    if (q > r.scanned) r.scanned = q.get_si();
    Int e1 = pow(q, (unsigned long)(f.weight - 1)) + 1;
    wits.emplace_back(q, aq - NFElem(Rat(e1)));
  }
  if (wits.empty() || r.scanned < f.sturm) r.low_confidence = true;

  Int g(0);
  for (auto& [q, w] : wits) {
    Rat nm = f.K ? f.K->norm(w) : w.rational();
    if (nm.get_den() != 1)
      throw std::logic_error("bad_prime_set: eigenvalue witness is not integral");
    g = gcd(g, nm.get_num());
  }
  if (g < 0) g = -g;

  if (g != 0 && g != 1) {
    for (auto& [ell, e] : factor(g)) {
      if (div_ex.count(ell)) continue;
      // verify the congruence at every prime of the field above ell
      auto verify = [&](const PrimeIdeal* lam) -> std::vector<Int> {
        std::vector<Int> good;
        for (auto& [q, w] : wits) {
          if (q == ell) continue;  // the scan statement excludes q = ell
          if (w == NFElem(0)) { good.push_back(q); continue; }
          long v = lam ? f.K->val(*lam, w) : valuation(w.rational(), ell);
          if (v < 1) return {};
          good.push_back(q);
        }
        return good;
      };
      if (!f.K) {
        auto qs = verify(nullptr);
        if (!qs.empty())
          r.reducible.push_back({ell, 0,
              "a_q = q^" + std::to_string(f.weight - 1) + " + 1 (mod " +
              ell.get_str() + ") for q in {" + join_qs(qs) + "}"});
        continue;
      }
      try {
        for (const PrimeIdeal& lam : f.K->primes_above(ell)) {
          auto qs = verify(&lam);
          if (!qs.empty())
            r.reducible.push_back({ell, lam.index,
                "a_q = q^" + std::to_string(f.weight - 1) +
                " + 1 (mod prime " + std::to_string(lam.index) + " above " +
                ell.get_str() + ") for q in {" + join_qs(qs) + "}"});
        }
      } catch (const std::domain_error&) {
        // ell divides the equation-order index: keep the norm-level statement
        r.reducible.push_back({ell, -1,
            "norm of a_q - q^" + std::to_string(f.weight - 1) +
            " - 1 divisible by " + ell.get_str() +
            " for all scanned q; prime split unavailable at this prime"});
      }
    }
  }

  r.dihedral_window = dihedral_window(f.weight);

  std::map<Int, std::string> reasons;
  for (const Int& ell : r.divisor_exclusions)
    reasons[ell] = "divides N k!";
  for (const auto& s : r.reducible)
    if (!reasons.count(s.ell)) reasons[s.ell] = "reducibility suspect: " + s.witness;
  for (const Int& ell : r.dihedral_window) {
    std::string d = "dihedral window: (ell-1), (ell+1) or ell divides 2(k-1)";
    auto it = reasons.find(ell);
    if (it == reasons.end()) reasons[ell] = d;
  }
  r.candidates.assign(reasons.begin(), reasons.end());
  return r;
}

bool bad_prime_contains(const BadPrimeReport& r, const Int& ell) {
  for (auto& [p, reason] : r.candidates)
    if (p == ell) return true;
  return false;
}

bool bad_prime_contains_lambda(const BadPrimeReport& r, const Int& ell,
                               long index) {
  for (auto& p : r.divisor_exclusions)
    if (p == ell) return true;
  for (auto& p : r.dihedral_window)
    if (p == ell) return true;
  for (auto& s : r.reducible)
    if (s.ell == ell && (s.index < 0 || s.index == index)) return true;
  return false;
}

}  // namespace msadj
