#pragma once
// Dirichlet characters addressed by Conrey-style labels "N.i": the pairing on
// (Z/N)^* built from smallest compatible primitive roots at odd prime powers
// and <-1, 5> at powers of two. Values are exact roots of unity, exposed as
// exponents e(c) = exp(2 pi i c), c rational.

#include <optional>
#include <string>

#include "core/ball.hpp"
#include "core/numberfield.hpp"

namespace msadj {

struct CharFactor {
  Int q;      // p^e
  Int p;
  long e;
  // odd p: single generator gen of (Z/p^e)^*; p=2, e>=3: generators -1 and 5.
  Int gen;
  Int ordgen;          // phi(p^e) for odd p; 2^(e-2) for the 5-part
  Int expo5 = 0;       // character exponent on 5-part (p=2, e>=3)
  Int expo_minus1 = 0; // character exponent on -1 (p=2, e>=2): 0 or 1
  Int expo = 0;        // character exponent on gen (odd p)
};

class DirichletChar {
 public:
  DirichletChar() = default;  // trivial mod 1
  static DirichletChar from_label(const std::string& label);
  static DirichletChar make(const Int& modulus, const Int& conrey_index);
  static DirichletChar trivial(const Int& modulus) { return make(modulus, Int(1)); }

  const Int& modulus() const { return N; }
  const Int& conrey_index() const { return index; }
  std::string label() const { return N.get_str() + "." + index.get_str(); }

  // exponent c with chi(a) = e^{2 pi i c}, reduced to [0,1); nullopt when gcd(a,N)>1
  std::optional<Rat> value_exponent(const Int& a) const;

  long order() const;
  Int conductor() const;
  bool is_even() const;  // chi(-1) == 1
  bool is_trivial() const { return order() == 1; }

  // chi(a) as exact rational; requires order <= 2. 0 when gcd(a,N) > 1.
  Rat value_rat(const Int& a) const;
  // chi(a) in Q(zeta_ord) with zeta = theta of K (K must be cyclotomic of order());
  // rational fallback when K == nullptr (order <= 2 only). 0 when not coprime.
  NFElem value_nf(const Int& a, const NumberField* K) const;

  // Gauss sum sum_a chi(a) e^{2 pi i a / N} as a complex ball.
  CBall gauss_sum(mpfr_prec_t prec) const;

  bool same_primitive(const DirichletChar& other) const;

 private:
  Int N = 1;
  Int index = 1;
  std::vector<CharFactor> factors;
};

// All Conrey indices of characters mod M (ascending).
std::vector<Int> all_character_indices(const Int& M);

}  // namespace msadj
