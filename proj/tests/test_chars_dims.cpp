#include <doctest.h>

#include "chars/dirichlet.hpp"
#include "modsym/dims.hpp"
#include "modsym/qexp.hpp"

using namespace msadj;

TEST_CASE("character labels: pinned examples") {
  auto t1 = DirichletChar::from_label("1.1");
  CHECK(t1.order() == 1);
  CHECK(t1.conductor() == 1);
  CHECK(t1.is_even());

  auto t3 = DirichletChar::from_label("3.1");
  CHECK(t3.order() == 1);
  CHECK(t3.conductor() == 1);
  CHECK(t3.is_even());
  CHECK(t3.value_rat(2) == 1);
  CHECK(t3.value_rat(3) == 0);

  auto q5 = DirichletChar::from_label("5.4");
  CHECK(q5.order() == 2);
  CHECK(q5.conductor() == 5);
  CHECK(q5.is_even());
  // quadratic residues mod 5 are 1, 4
  CHECK(q5.value_rat(1) == 1);
  CHECK(q5.value_rat(4) == 1);
  CHECK(q5.value_rat(2) == -1);
  CHECK(q5.value_rat(3) == -1);

  auto o4 = DirichletChar::from_label("4.3");
  CHECK(o4.order() == 2);
  CHECK(o4.conductor() == 4);
  CHECK(!o4.is_even());
  CHECK(o4.value_rat(3) == -1);
}

TEST_CASE("character labels: round trip and algebra") {
  for (long N : {1, 2, 3, 4, 5, 7, 8, 9, 11, 12, 16, 23, 36, 40}) {
    for (const Int& i : all_character_indices(N)) {
      auto chi = DirichletChar::make(N, i);
      CHECK(DirichletChar::from_label(chi.label()).conrey_index() == i);
      // multiplicativity on a small sample
      for (Int a = 1; a <= 12; a += 1)
        for (Int b = 1; b <= 12; b += 1) {
          auto ca = chi.value_exponent(a), cb = chi.value_exponent(b);
          auto cab = chi.value_exponent(a * b);
          if (!ca || !cb) {
            CHECK(!cab);
          } else {
            Rat d = *ca + *cb - *cab;
            d.canonicalize();
            CHECK(d.get_den() == 1);
          }
        }
      // order consistency: chi^order is trivial
      long ord = chi.order();
      for (Int a = 1; a <= N; a += 1) {
        auto c = chi.value_exponent(a);
        if (!c) continue;
        Rat e = *c * ord;
        e.canonicalize();
        CHECK(e.get_den() == 1);
      }
    }
  }
  // conductor anchors
  CHECK(DirichletChar::from_label("12.11").conductor() == 12);
  CHECK(DirichletChar::from_label("9.4").conductor() == 9);   // order 3
  CHECK(DirichletChar::from_label("8.5").conductor() == 8);
  CHECK(DirichletChar::from_label("8.7").conductor() == 4);   // induced from 4.3
}

TEST_CASE("character values in cyclotomic fields and gauss sums") {
  auto chi = DirichletChar::make(5, 2);  // order 4
  CHECK(chi.order() == 4);
  CHECK(!chi.is_even());
  const NumberField* K = NumberField::cyclotomic_field(4);
  NFElem i = K->theta();
  NFElem v2 = chi.value_nf(2, K);
  CHECK(v2 == i);  // e(dlog(2) * dlog(2) / 4) = e(1/4)
  NFElem v4 = chi.value_nf(4, K);
  CHECK(v4 == NFElem(Rat(-1)));

  // |G(chi)|^2 = N for primitive chi
  for (const char* lbl : {"5.4", "4.3", "5.2", "7.3", "8.5", "12.11"}) {
    auto c = DirichletChar::from_label(lbl);
    REQUIRE(c.conductor() == c.modulus());
    CBall g = c.gauss_sum(128);
    RBall n2 = g.norm2();
    RBall diff = n2 - RBall::exact(Rat(c.modulus()), 128);
    CHECK(diff.abs_upper_d() < 1e-30);
  }
}

TEST_CASE("cusp form dimensions: anchors") {
  auto triv = [](long N) { return DirichletChar::trivial(N); };
  CHECK(dim_cusp(11, 2, triv(11)) == 1);
  CHECK(dim_cusp(23, 2, triv(23)) == 2);
  CHECK(dim_cusp(37, 2, triv(37)) == 2);
  CHECK(dim_cusp(1, 12, triv(1)) == 1);
  CHECK(dim_cusp(5, 4, triv(5)) == 1);
  CHECK(dim_cusp(44, 2, triv(44)) == 4);
  CHECK(dim_cusp(1, 2, triv(1)) == 0);
  CHECK(dim_cusp(2, 2, triv(2)) == 0);
  CHECK(dim_cusp(1, 16, triv(1)) == 1);
  CHECK(dim_cusp(1, 24, triv(1)) == 2);
  CHECK(dim_cusp(1, 26, triv(1)) == 1);
  CHECK(dim_cusp(99, 2, triv(99)) == 9);
  // parity mismatch is the zero space
  CHECK(dim_cusp(3, 3, triv(3)) == 0);
  CHECK(dim_cusp(11, 3, triv(11)) == 0);
  // odd weight with odd character
  CHECK(dim_cusp(7, 3, DirichletChar::from_label("7.6")) == 1);
  CHECK(dim_cusp(4, 3, DirichletChar::from_label("4.3")) == 0);
  // trivial character mod 8, weight 2: genus zero
  CHECK(dim_cusp(8, 2, DirichletChar::from_label("8.1")) == 0);
}

TEST_CASE("eisenstein dimensions and cusp counts") {
  CHECK(gamma0_index(11) == 12);
  CHECK(gamma0_index(44) == 72);
  CHECK(gamma0_index(99) == 144);
  CHECK(gamma0_ncusps(11) == 2);
  CHECK(gamma0_ncusps(44) == 6);
  CHECK(gamma0_ncusps(9) == 4);

  auto triv = [](long N) { return DirichletChar::trivial(N); };
  // weight 2, trivial character: one fewer than the cusp count
  CHECK(dim_eis(11, 2, triv(11)) == gamma0_ncusps(11) - 1);
  CHECK(dim_eis(44, 2, triv(44)) == gamma0_ncusps(44) - 1);
  CHECK(dim_eis(9, 2, triv(9)) == gamma0_ncusps(9) - 1);
  // weight >= 4, trivial character: equals the cusp count
  CHECK(dim_eis(11, 4, triv(11)) == gamma0_ncusps(11));
  CHECK(dim_eis(9, 4, triv(9)) == gamma0_ncusps(9));
  CHECK(dim_eis(1, 12, triv(1)) == 1);
  CHECK(dim_eis(5, 4, triv(5)) == 2);
  // odd weights, trivial character: empty
  CHECK(dim_eis(11, 3, triv(11)) == 0);
}

TEST_CASE("sturm bounds") {
  CHECK(sturm_bound(44, 2) == 12);
  CHECK(sturm_bound(4, 12) == 6);
  CHECK(sturm_bound(99, 2) == 24);
  CHECK(sturm_bound(1, 12) == 1);
  CHECK(sturm_bound(11, 2) == 2);
}

TEST_CASE("qexp oracles") {
  long n = 130;
  auto d1 = qexp_delta(n);
  auto d2 = qexp_delta_eisenstein(n);
  for (long m = 1; m <= n; ++m) CHECK(d1[m] == d2[m]);
  CHECK(d1[1] == 1);
  CHECK(d1[2] == -24);
  CHECK(d1[3] == 252);
  CHECK(d1[4] == -1472);
  CHECK(d1[5] == 4830);

  auto b = qexp_11a(n);
  CHECK(b[1] == 1);
  CHECK(b[2] == -2);
  CHECK(b[3] == -1);
  CHECK(b[4] == 2);
  CHECK(b[5] == 1);
  CHECK(b[9] == -2);
  CHECK(b[11] == 1);

  auto c = qexp_5w4(n);
  CHECK(c[1] == 1);
  CHECK(c[2] == -4);
  CHECK(c[3] == 2);
  CHECK(c[4] == 8);
  CHECK(c[5] == -5);

  // multiplicativity spot checks (these forms are normalized eigenforms)
  CHECK(d1[6] == d1[2] * d1[3]);
  CHECK(b[6] == b[2] * b[3]);
  CHECK(c[6] == c[2] * c[3]);
  // Hecke recursion at p^2: a_{p^2} = a_p^2 - p^{k-1} a_1 (level 1 and good p)
  CHECK(d1[4] == d1[2] * d1[2] - pow(Int(2), 11));
  CHECK(b[4] == b[2] * b[2] - Int(2));
  CHECK(c[4] == c[2] * c[2] - pow(Int(2), 3));
  // and at p | N: a_{p^2} = a_p^2
  CHECK(b[121] == b[11] * b[11]);
  CHECK(c[25] == c[5] * c[5]);
}
