#include <doctest.h>

#include "modsym/lattice.hpp"
#include "modsym/pairing.hpp"

using namespace msadj;

namespace {

std::vector<Rat> rand_poly(long m, gmp_randclass& rng) {
  std::vector<Rat> P(m + 1);
  for (auto& c : P) c = Rat(Int(rng.get_z_range(19)) - 9);
  return P;
}

M22 rand_word(gmp_randclass& rng, int len) {
  M22 g = M22::id();
  const M22 S(0, -1, 1, 0), T(1, 1, 0, 1);
  for (int i = 0; i < len; ++i) {
    long c = Int(rng.get_z_range(3)).get_si();
    g = g * (c == 0 ? S : (c == 1 ? T : T.adj()));
  }
  return g;
}

Mat<Rat> mat_mul(const Mat<Rat>& A, const Mat<Rat>& B) {
  Mat<Rat> C(A.nr, B.nc);
  for (long i = 0; i < A.nr; ++i)
    for (long j = 0; j < B.nc; ++j) {
      Rat s(0);
      for (long t = 0; t < A.nc; ++t) s += A.at(i, t) * B.at(t, j);
      C.at(i, j) = s;
    }
  return C;
}

Mat<Rat> mat_t(const Mat<Rat>& A) {
  Mat<Rat> C(A.nc, A.nr);
  for (long i = 0; i < A.nr; ++i)
    for (long j = 0; j < A.nc; ++j) C.at(j, i) = A.at(i, j);
  return C;
}

void expect_self_adjoint(const QSpace& sp, const CoverPairing& cp,
                         const std::vector<long>& ps) {
  auto G = cp.gram_twisted(sp.cuspidal);
  for (long p : ps) {
    auto T = restrict_to_rows(sp.cuspidal, sp.hecke(Int(p)));
    auto lhs = mat_mul(mat_t(T), G);
    auto rhs = mat_mul(G, T);
    for (long i = 0; i < G.nr; ++i)
      for (long j = 0; j < G.nc; ++j) CHECK(lhs.at(i, j) == rhs.at(i, j));
  }
}

}  // namespace

TEST_CASE("coefficient pairing is invariant under the polynomial action") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(4207);
  for (long m : {0L, 1L, 2L, 4L, 6L, 10L}) {
    for (int trial = 0; trial < 12; ++trial) {
      auto P = rand_poly(m, rng), Q = rand_poly(m, rng);
      M22 A = rand_word(rng, 7);
      Rat before = sym_power_pairing(P, Q);
      Rat after = sym_power_pairing(rho_poly(A, P), rho_poly(A, Q));
      CHECK(before == after);
      // parity under swapping the arguments
      CHECK(sym_power_pairing(Q, P) == (m % 2 ? -before : before));
    }
  }
}

TEST_CASE("level 11 weight 2: integral cuspidal lattice Gram is unimodular") {
  QSpace sp(Int(11), 2, DirichletChar::trivial(Int(11)));
  CoverPairing cp(sp);
  auto lat = integral_lattices(sp);
  REQUIRE(lat.cuspidal.nr == 2);
  auto G = cp.gram_raw(lat.cuspidal);
  CHECK(G.at(0, 0) == 0);
  CHECK(G.at(1, 1) == 0);
  CHECK(G.at(0, 1) * G.at(1, 0) == -1);
  Rat u = G.at(0, 1);
  CHECK((u == 1 || u == -1));
}

TEST_CASE("transfer chains respect the relations under the pairing") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(90125);
  for (auto& [Ns, k] : std::vector<std::pair<long, long>>{{11, 2}, {5, 4}, {9, 4}, {1, 12}}) {
    QSpace sp(Int(Ns), k, DirichletChar::trivial(Int(Ns)));
    CoverPairing cp(sp);
    std::vector<CoverPairing::Chain> cusp_chains;
    for (long i = 0; i < sp.cuspidal.nr; ++i)
      cusp_chains.push_back(cp.chain_of(sp.cuspidal.row(i)));
    for (int trial = 0; trial < 6; ++trial) {
      M22 h = rand_word(rng, 9);
      std::vector<Rat> Q(sp.m + 1, Rat(0));
      Q[Int(rng.get_z_range(sp.m + 1)).get_si()] = Rat(1);
      // the symbol pushed directly, minus the push of its class expansion:
      // a null class; it must pair to zero with every cuspidal chain
      auto direct = cp.chain_of_symbol(h, Q);
      auto expanded = cp.chain_of(sp.project(h, Q));
      CoverPairing::Chain diff = direct;
      for (auto& [sl, P] : expanded) {
        auto& d = diff[sl];
        if (d.empty()) d.assign(P.size(), Rat(0));
        for (size_t t = 0; t < P.size(); ++t) d[t] -= P[t];
      }
      for (const auto& cy : cusp_chains)
        CHECK(cp.pair_chains(diff, cy) == 0);
    }
  }
}

TEST_CASE("raw pairing is antisymmetric on the cuspidal part") {
  for (auto& [Ns, k] : std::vector<std::pair<long, long>>{{11, 2}, {5, 4}, {9, 4}, {1, 12}, {44, 2}}) {
    QSpace sp(Int(Ns), k, DirichletChar::trivial(Int(Ns)));
    CoverPairing cp(sp);
    auto G = cp.gram_raw(sp.cuspidal);
    for (long i = 0; i < G.nr; ++i)
      for (long j = 0; j < G.nc; ++j) CHECK(G.at(i, j) == -G.at(j, i));
    CHECK(det(G) != 0);
  }
}

TEST_CASE("twisted Gram commutes with the Hecke action, good and bad primes") {
  {
    QSpace sp(Int(11), 2, DirichletChar::trivial(Int(11)));
    CoverPairing cp(sp);
    expect_self_adjoint(sp, cp, {2, 3, 5, 7, 11, 13, 17, 19});
  }
  {
    QSpace sp(Int(44), 2, DirichletChar::trivial(Int(44)));
    CoverPairing cp(sp);
    expect_self_adjoint(sp, cp, {2, 3, 5, 11});
  }
  {
    QSpace sp(Int(9), 4, DirichletChar::trivial(Int(9)));
    CoverPairing cp(sp);
    expect_self_adjoint(sp, cp, {2, 3, 5});
  }
  {
    QSpace sp(Int(1), 12, DirichletChar::trivial(Int(1)));
    CoverPairing cp(sp);
    expect_self_adjoint(sp, cp, {2, 3, 5, 7});
  }
}
