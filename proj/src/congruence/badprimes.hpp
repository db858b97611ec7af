#pragma once
// Candidate bad primes of an eigenform: the primes where the residual-adjoint
// hypotheses behind the congruence-ideal theorems are not screened as
// satisfied.  Three computable screens are combined: divisor exclusions
// (ell | N k!), an Eisenstein congruence scan for reducibility suspects, and
// the dihedral weight window.  Every flagged prime carries its reason; every
// reducibility suspect carries the witness congruences.  The screens are a
// computable approximation of a Galois-theoretic condition, so consumers must
// treat flagged primes as "no statement", not as confirmed failures.

#include <string>
#include <utility>
#include <vector>

#include "hecke/newforms.hpp"

namespace msadj {

struct EisensteinSuspect {
  Int ell;
  long index = -1;      // prime-of-field index; -1 = statement at ell only
  std::string witness;  // the verified congruences
};

struct BadPrimeReport {
  Int level;
  long weight = 0;
  long bound = 0;              // requested scan bound
  long scanned = 0;            // largest prime actually scanned
  bool low_confidence = false; // scan data below the reliability threshold
  std::vector<Int> divisor_exclusions;       // ell | N k!
  std::vector<EisensteinSuspect> reducible;  // Eisenstein scan hits
  std::vector<Int> dihedral_window;          // from the weight alone
  // final candidate set with one reason string per prime
  std::vector<std::pair<Int, std::string>> candidates;
};

// Primes ell with (ell-1) | 2(k-1), (ell+1) | 2(k-1), or ell | 2(k-1); the
// last case covers dihedral ramification at ell itself.
std::vector<Int> dihedral_window(long k);

// Runs the three screens against the record's stored eigenvalues.  The
// Eisenstein scan uses a_q for q <= bound with q = 1 mod N and q prime to N:
// ell is a suspect when a_q = q^(k-1) + 1 mod lambda for every admissible
// scanned q prime to ell.  Raising the bound can only remove suspects.
BadPrimeReport bad_prime_set(const NewformRecord& f, long bound);

bool bad_prime_contains(const BadPrimeReport& r, const Int& ell);

// Screen granularity at a single prime of the Hecke field: divisor and
// dihedral exclusions act at ell, reducibility suspects at their own prime of
// the field (index -1 matches every prime above ell).
bool bad_prime_contains_lambda(const BadPrimeReport& r, const Int& ell,
                               long index);

}  // namespace msadj
