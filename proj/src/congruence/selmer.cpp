#include "congruence/selmer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace msadj {

SelmerReport selmer_prediction(const NewformRecord& f,
                               const std::vector<Int>& sigma,
                               const EtaResult& eta,
                               const BadPrimeReport& bad) {
  if (!f.is_new)
    throw std::domain_error(
        "selmer_prediction: oldform record; compute at its true level");
  if (eta.sigma != sigma)
    throw std::domain_error("selmer_prediction: eta was computed for a different sigma");
  for (const auto& lt : f.local_types) {
    if (!lt.exceptional) continue;
    if (std::find(sigma.begin(), sigma.end(), lt.p) == sigma.end())
      throw std::domain_error(
          "selmer_prediction: ramification at " + lt.p.get_str() +
          " is flagged exceptional, so the prediction requires " +
          lt.p.get_str() + " in sigma (minimal ramification outside sigma)");
  }

  SelmerReport out;
  out.level = f.level;
  out.weight = f.weight;
  out.sigma = sigma;
  out.excluded = eta.excluded;
  out.lattice_model = eta.lattice_model;
  out.hypotheses =
      "residual irreducibility and dihedral-image exclusion are screened "
      "computationally (divisor, Eisenstein and weight-window tests), not "
      "proven; predicted length = v_lambda(congruence ideal) under those "
      "hypotheses, with minimal ramification outside sigma";
  out.elsewhere =
      "every prime of the field outside the excluded window, the candidate "
      "set and this list has predicted length 0";

  std::set<Int> sig(sigma.begin(), sigma.end());
  std::set<std::pair<Int, long>> listed;

  // the eta support first: predictions where the hypotheses are screened true
  for (auto& [ell, index, v] : eta.vals) {
    SelmerEntry e;
    e.ell = ell;
    e.index = index;
    listed.insert({ell, index});
    if (sig.count(ell)) {
      e.note = "no prediction: lambda divides a prime of sigma";
    } else if (bad_prime_contains_lambda(bad, ell, index)) {
      for (auto& [p, reason] : bad.candidates)
        if (p == ell) e.note = "no prediction: " + reason;
    } else {
      e.predicted = true;
      e.length = v;
    }
    out.entries.push_back(e);
  }

  // remaining candidate primes inside the window: explicit no-prediction rows
  std::set<Int> ex(eta.excluded.begin(), eta.excluded.end());
  for (auto& [ell, reason] : bad.candidates) {
    if (ex.count(ell)) continue;
    std::vector<long> indices{0};
    if (f.K) {
      indices.clear();
      try {
        for (const PrimeIdeal& lam : f.K->primes_above(ell))
          indices.push_back(lam.index);
      } catch (const std::domain_error&) {
        indices.push_back(-1);  // split unavailable: one row at ell itself
      }
    }
    for (long index : indices) {
      if (listed.count({ell, index})) continue;
      // a reducibility suspect can be specific to one prime of the field;
      // the others above ell stay unflagged and fall under "elsewhere"
      if (index >= 0 && !bad_prime_contains_lambda(bad, ell, index)) continue;
      SelmerEntry e;
      e.ell = ell;
      e.index = index;
      e.note = "no prediction: " + reason;
      out.entries.push_back(e);
      listed.insert({ell, index});
    }
  }

  std::sort(out.entries.begin(), out.entries.end(),
            [](const SelmerEntry& a, const SelmerEntry& b) {
              return a.ell != b.ell ? a.ell < b.ell : a.index < b.index;
            });
  return out;
}

}  // namespace msadj
