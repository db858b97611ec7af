#pragma once
// Integral structure of a rational symbol space: the lattice spanned by the
// images of all generators, and its cuspidal sublattice (kernel of the
// boundary map, which is saturated by construction).

#include "modsym/space.hpp"

namespace msadj {

struct SymbolLattice {
  Mat<Rat> basis;     // rows: integral basis of the generator-image lattice
  Mat<Rat> cuspidal;  // rows: integral basis of its cuspidal sublattice
};

SymbolLattice integral_lattices(const QSpace& sp);

}  // namespace msadj
