#pragma once
// Topological intersection pairing on the weight-k symbol space, computed on
// the cover by the intersection of the level group with the principal level-3
// group.  That cover has no elliptic points, its ideal triangulation is a
// genuine combinatorial surface, and transfer of a symbol is a 1-chain there.
// Two transferred chains only meet inside cusp neighbourhoods, where crossing
// numbers are read off from winding levels around each cusp fan.
//
// Only the rational-coefficient spaces (character of order <= 2) and even
// weight are supported; that covers every place the pairing is consumed.

#include <map>
#include <optional>

#include "modsym/space.hpp"

namespace msadj {

// <X^i Y^(m-i), X^j Y^(m-j)> = 0 unless i + j = m, where it is (-1)^i i!(m-i)!.
// Invariant under the rho action of SL2(Z); antisymmetric for odd m... for the
// symbol pairing the relevant parity comes out of the chain geometry instead.
Rat sym_power_pairing(const std::vector<Rat>& P, const std::vector<Rat>& Q);

class CoverPairing {
 public:
  explicit CoverPairing(const QSpace& sp);

  // Raw intersection number of two classes given in quotient-basis
  // coordinates.  Both must be cuspidal (boundary zero); the cusp winding
  // levels do not close up otherwise and this throws.
  Rat pair_raw(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  // Gram matrices on a set of row vectors in quotient-basis coordinates.
  Mat<Rat> gram_raw(const Mat<Rat>& rows) const;      // [i][j] = I(r_i, r_j)
  Mat<Rat> gram_twisted(const Mat<Rat>& rows) const;  // [i][j] = I(W r_i, r_j)

  // sparse chain on the cover: edge slot -> coefficient polynomial, written
  // in the chart of the slot's canonical coset lift
  using Chain = std::map<long, std::vector<Rat>>;

  Chain chain_of(const std::vector<Rat>& x) const;  // transfer of a class
  Chain chain_of_symbol(const M22& g, const std::vector<Rat>& Q) const;
  Rat pair_chains(const Chain& cx, const Chain& cy) const;

  // one directed tessellation edge per coset of the cover group
  long ncoset() const { return (long)lifts_.size(); }
  long ncusp() const { return (long)fans_.size(); }

 private:
  const QSpace* sp_;
  long m_;
  Int N_;
  long np_ = 0;          // size of the projective line at level N
  Rat eps0_;             // frozen global normalization (see pairing.cpp)

  std::vector<M22> lifts_;             // canonical integral lift per coset
  std::vector<long> key2coset_;        // (mod-3 code) * np + p1 index -> id
  std::vector<long> slot_;             // coset -> undirected edge slot
  std::vector<bool> samedir_;          // coset direction == slot direction
  std::vector<long> slot_canon_;       // slot -> its canonical coset
  struct Fan {
    std::vector<long> cosets;  // T-orbit, in order; edges pointing into cusp
    M22 x0;                    // chart base: fan edge j has lift x0 T^j
    Mat<Rat> hol;              // rho(x0 T^w x0^-1) - 1 on coefficients
  };
  std::vector<Fan> fans_;
  std::vector<std::pair<long, long>> fan_pos_;  // coset -> (fan, position)

  std::vector<Chain> basis_chains_;  // transfer of each quotient basis class
  std::vector<M22> gammahats_;       // coset reps for the transfer sum
  Mat<Rat> fricke_;

  long key_of(const M22& h) const;
  std::optional<M22> lift_from_key(const std::array<int, 4>& A, long p1idx) const;
  void add_contribution(Chain& c, const M22& h, const std::vector<Rat>& C) const;
  std::vector<Rat> coeff_at(const Chain& c, const M22& h, long coset_id) const;
};

}  // namespace msadj
