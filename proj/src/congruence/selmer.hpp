#pragma once
// Predicted lengths of the adjoint Selmer groups attached to a newform: at
// each prime of the Hecke field in the report window and outside the
// bad-prime candidate set, the predicted length is the valuation of the
// congruence ideal.  This is bookkeeping on top of eta_ideal and
// bad_prime_set; the hypotheses that the screens only approximate are
// recorded on the report, never silently asserted.

#include <string>
#include <vector>

#include "congruence/badprimes.hpp"
#include "congruence/eta.hpp"

namespace msadj {

struct SelmerEntry {
  Int ell;
  long index = 0;        // prime-of-field index (0 when the field is Q)
  bool predicted = false;
  long length = 0;       // meaningful only when predicted
  std::string note;      // reason when no prediction is made
};

struct SelmerReport {
  Int level;
  long weight = 0;
  std::vector<Int> sigma;
  std::vector<SelmerEntry> entries;
  std::vector<Int> excluded;  // window exclusions inherited from eta
  std::string elsewhere;      // statement about all unlisted primes
  std::string hypotheses;     // provenance of the screens
  std::string lattice_model;
};

// eta must have been computed for the same record and sigma; bad is the
// screen report for the record.  Errors: oldform records; a local type
// flagged exceptional at a prime missing from sigma (the prediction requires
// minimal ramification outside sigma).
SelmerReport selmer_prediction(const NewformRecord& f,
                               const std::vector<Int>& sigma,
                               const EtaResult& eta,
                               const BadPrimeReport& bad);

}  // namespace msadj
