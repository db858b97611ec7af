#pragma once
// The congruence ideal of a newform: the fractional O-ideal generated by the
// values of the O-valued alternating pairing on the saturated rank-2
// eigenlattice inside the integral cuspidal symbol lattice at level N^Sigma.
// It is reported as a valuation vector at the primes of the Hecke field away
// from N^Sigma * k!, which quotients out the global unit and normalization
// ambiguity (the theorems downstream only consume these valuations).
//
// Enlarging Sigma by a prime p multiplies the ideal by the inverse naive
// adjoint Euler factor at p; eta_scaling_check verifies that prime by prime.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "congruence/badprimes.hpp"
#include "hecke/newforms.hpp"

namespace msadj {

struct EtaResult {
  Int level;  // N^Sigma: level of the lattice the ideal was computed on
  long weight = 0;
  std::vector<Int> sigma;
  const NumberField* K = nullptr;  // null: Hecke field is the rationals
  // nonzero valuations (ell, index of the prime above ell, v); index 0 when
  // the field is the rationals
  std::vector<std::tuple<Int, long, long>> vals;
  std::vector<Int> excluded;  // report window: primes dividing N^Sigma * k!
  std::vector<Int> skipped;   // support primes dividing the equation-order index
  std::vector<NFElem> generators;  // pairing values <b_i, b_j>, i < j
  std::string lattice_model = "modular symbols";
  std::string normalization =
      "Fricke-twisted intersection pairing on the saturated eigenlattice; "
      "coefficient-field values rescaled by the different of the equation "
      "order (removes the trace-dual denominator)";
};

// delta_p: dimension of the inertia invariants at p, read off the record.
long sigma_exponent(const NewformRecord& f, const Int& p);

// N^Sigma = N * prod_{p in Sigma} p^{delta_p}.
Int sigma_level(const NewformRecord& f, const std::vector<Int>& sigma);

// The inverse value at s = 1 of the naive adjoint Euler factor at p:
//   delta = 2:  (1 - 1/p)(1 - c/p + 1/p^2),  c = a_p^2/(psi(p) p^(k-1)) - 2
//   delta = 1:  1 - 1/p^2 (special), 1 - 1/p (principal series)
//   delta = 0:  1
NFElem naive_adjoint_inv(const NewformRecord& f, const Int& p);

// The congruence ideal.  basis_change, when given, must be a square
// unimodular matrix of the lattice rank; it re-expresses the computed lattice
// basis before the pairing is evaluated (the valuations must not move).
EtaResult eta_ideal(const NewformRecord& f, const std::vector<Int>& sigma,
                    const ZMat* basis_change = nullptr);

// v_lambda(eta) for the prime of index `index` above ell (0 when absent).
long eta_valuation(const EtaResult& eta, const Int& ell, long index);

struct ScalingRow {
  Int ell;
  long index = 0;
  long v_base = 0;      // v_lambda(eta^Sigma)
  long v_extended = 0;  // v_lambda(eta^(Sigma + p))
  long v_factor = 0;    // v_lambda of the inverse naive factor
  bool pass = false;
  bool screened = false;  // this prime of the field flagged by the bad-prime
                          // screens: outside theorem hypotheses, label not
                          // verdict
};

struct ScalingCheck {
  Int p;
  std::vector<Int> sigma;
  NFElem factor;  // the inverse naive adjoint Euler factor at p
  std::vector<ScalingRow> rows;
  std::vector<Int> excluded;  // window: primes dividing N^(Sigma+p) * k!
  bool all_pass = true;       // over rows that are not screened out
  bool screens_low_confidence = false;  // the record's a_q list was too short
                                        // for a trustworthy reducibility scan
};

// Verifies v(eta^(Sigma+p)) - v(eta^Sigma) = v(inverse naive factor) at every
// prime of the field in the report window, p not already in Sigma.
ScalingCheck eta_scaling_check(const NewformRecord& f,
                               const std::vector<Int>& sigma, const Int& p,
                               long screen_bound = 50);

// Optional cross-check: the order of the congruence module
// (cuspidal lattice) / (f-saturated part + complement-saturated part)
// at the record's own level.  Reported for comparison with eta only; no
// equality between the two is asserted anywhere.
Int congruence_module_order(const QSpace& sp,
                            const std::vector<NewformRecord>& recs,
                            size_t which);

}  // namespace msadj
