#pragma once
// Eigensystem decomposition of the cuspidal subspace: isotypic blocks are cut
// out with T_q for q prime to the level only, so that each block is a full
// Galois orbit with its oldform copies intact; a block is old exactly when it
// lies in the span of the transfer images from proper divisor levels, and in
// that case its record is computed at the smaller level and flagged.

#include <string>

#include "modsym/dims.hpp"
#include "modsym/space.hpp"

namespace msadj {

struct LocalTypeInfo {
  Int p;
  long delta;        // dimension of the inertia invariants: 2, 1 or 0
  std::string cls;   // "good" | "special" | "principal series" | "supercuspidal" | "unknown"
  bool exceptional = false;  // never set by computation, only by ingested data
  std::string provenance = "computed";
};

struct NewformRecord {
  Int level;                // level of the underlying newform
  long weight = 0;
  std::string character;    // label of the form's character
  bool is_new = true;       // false: oldform copy inside the ambient space
  Int ambient_level;        // level of the space the block was found in

  ZPoly field_poly;              // defining polynomial of the coefficient field
  const NumberField* K = nullptr;  // null when the field is Q
  std::vector<std::pair<Int, NFElem>> ap;  // eigenvalues at primes, ascending
  std::vector<LocalTypeInfo> local_types;  // at primes dividing the level

  Mat<Rat> block;               // rows span the block, ambient cuspidal coords
  std::vector<NFElem> eigvec;   // eigenvector over K, cuspidal coords at `level`
                                // (empty for oldform records)
  long sturm = 0;
  std::vector<std::string> warnings;

  NFElem eigenvalue(const Int& p) const;  // throws when p is not recorded
};

// One record per Galois orbit in the cuspidal subspace, eigenvalues at primes
// p <= bound. Old orbits are matched to divisor levels through the transfer
// maps and reported with their true level. Deterministic order.
std::vector<NewformRecord> newform_decomposition(const QSpace& sp, long bound);

// a_1..a_n from the recorded a_p via the Hecke recursion (index 0 unused).
std::vector<NFElem> an_from_ap(const NewformRecord& f, long n);

// Local type at p from the level/character/eigenvalue data:
//   p not dividing N: delta = 2, good;
//   p | N, a_p^2 = psi_0(p) p^(k-2) (psi_0 = prime-to-p part): delta 1, special;
//   p | N, p-part of N equal to p-part of cond(psi): delta 1, principal series;
//   both tests passing is inconsistent data; neither: delta 0, supercuspidal.
LocalTypeInfo classify_local(const NewformRecord& f, const Int& p);

// Fricke sign of a new rational-character orbit: W x_f = w N^((k-2)/2) x_f.
Rat fricke_sign(const QSpace& sp, const NewformRecord& f);

}  // namespace msadj
