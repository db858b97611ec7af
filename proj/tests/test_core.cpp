#include "doctest.h"

#include "core/arith.hpp"
#include "core/ball.hpp"
#include "core/linalg.hpp"
#include "core/numberfield.hpp"
#include "core/poly.hpp"

using namespace msadj;

TEST_CASE("integer factorization and helpers") {
  auto f = factor(Int(5040));
  REQUIRE(f.size() == 4);
  CHECK(f[0] == std::make_pair(Int(2), 4L));
  CHECK(f[1] == std::make_pair(Int(3), 2L));
  CHECK(f[2] == std::make_pair(Int(5), 1L));
  CHECK(f[3] == std::make_pair(Int(7), 1L));
  CHECK(euler_phi(Int(44)) == 20);
  CHECK(divisors(Int(44)) == std::vector<Int>({1, 2, 4, 11, 22, 44}));
  CHECK(valuation(Int(2048), Int(2)) == 11);
  CHECK(valuation(Rat(5, 8), Int(2)) == -3);
  CHECK(primitive_root(Int(25)) == 2);
  CHECK(crt(Int(2), Int(3), Int(3), Int(5)) == 8);
  CHECK(is_prime(Int(691)));
}

TEST_CASE("hnf, kernel, saturation") {
  ZMat A(2, 3);
  A.at(0, 0) = 2; A.at(0, 1) = 4; A.at(0, 2) = 6;
  A.at(1, 0) = 0; A.at(1, 1) = 2; A.at(1, 2) = 2;
  ZMat H = hnf(A);
  REQUIRE(H.nr == 2);
  CHECK(H.at(0, 0) == 2);
  // kernel of [1 2 3] is rank 2
  ZMat B(1, 3);
  B.at(0, 0) = 1; B.at(0, 1) = 2; B.at(0, 2) = 3;
  ZMat K = kernel_z(B);
  REQUIRE(K.nr == 2);
  for (long i = 0; i < K.nr; i++)
    CHECK(K.at(i, 0) * 1 + K.at(i, 1) * 2 + K.at(i, 2) * 3 == 0);
  // saturation of 2*Z^2 inside Z^2 is Z^2
  ZMat C(2, 2);
  C.at(0, 0) = 2; C.at(1, 1) = 2;
  ZMat S = saturate(C);
  REQUIRE(S.nr == 2);
  CHECK(S.at(0, 0) == 1);
  CHECK(S.at(1, 1) == 1);
  // saturation of the row (2,4) is (1,2)
  ZMat D(1, 2);
  D.at(0, 0) = 2; D.at(0, 1) = 4;
  ZMat SD = saturate(D);
  REQUIRE(SD.nr == 1);
  CHECK(SD.at(0, 0) == 1);
  CHECK(SD.at(0, 1) == 2);
}

TEST_CASE("rref, solve, inverse, charpoly") {
  QMat A(2, 2);
  A.at(0, 0) = 1; A.at(0, 1) = 2;
  A.at(1, 0) = 3; A.at(1, 1) = 4;
  auto p = charpoly(A);
  // x^2 - 5x - 2
  REQUIRE(p.deg() == 2);
  CHECK(p.c[2] == 1);
  CHECK(p.c[1] == -5);
  CHECK(p.c[0] == -2);
  CHECK(det(A) == Rat(-2));
  QMat Ai = inverse(A);
  QMat I2 = A * Ai;
  CHECK(I2 == QMat::identity(2));
  std::vector<Rat> b{Rat(5), Rat(11)};
  std::vector<Rat> x;
  REQUIRE(solve(A, b, x));
  CHECK(A.apply(x) == b);

  // charpoly of companion-ish 3x3 vs det check
  QMat M(3, 3);
  long vals[3][3] = {{2, 1, 0}, {0, 3, 1}, {1, 0, 1}};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) M.at(i, j) = vals[i][j];
  auto cp = charpoly(M);
  // det(xI - M) at x=0 is det(-M) = -det(M)
  CHECK(cp.c[0] == -det(M));
  // trace
  CHECK(cp.c[2] == -(Rat(2) + 3 + 1));
}

TEST_CASE("polynomial factorization over Z") {
  // x^2 - 1
  ZPoly f(std::vector<Int>{-1, 0, 1});
  auto fac = factor_zpoly(f);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first.c == std::vector<Int>({-1, 1}));
  CHECK(fac[1].first.c == std::vector<Int>({1, 1}));
  // x^2 + x - 1 irreducible
  ZPoly g(std::vector<Int>{-1, 1, 1});
  auto gf = factor_zpoly(g);
  REQUIRE(gf.size() == 1);
  CHECK(gf[0].second == 1);
  // cyclotomic: Phi_12 = x^4 - x^2 + 1
  ZPoly c12 = cyclotomic(12);
  CHECK(c12.c == std::vector<Int>({1, 0, -1, 0, 1}));
  // Phi_12 irreducible
  CHECK(factor_zpoly(c12).size() == 1);
  // (x^2+x-1)(x^2-x+3)(x-2)^2 recovers factors
  ZPoly h = g * ZPoly(std::vector<Int>{3, -1, 1}) * ZPoly(std::vector<Int>{-2, 1}) *
            ZPoly(std::vector<Int>{-2, 1});
  auto hf = factor_zpoly(h);
  REQUIRE(hf.size() == 3);
  long total = 0;
  for (auto& [q, e] : hf) total += q.deg() * e;
  CHECK(total == h.deg());
  // squarefree multiplicity
  bool saw_sq = false;
  for (auto& [q, e] : hf)
    if (e == 2) {
      saw_sq = true;
      CHECK(q.c == std::vector<Int>({-2, 1}));
    }
  CHECK(saw_sq);
  // factor mod p
  auto fm = factor_mod_p(ZPoly(std::vector<Int>{-1, 0, 1}), 7);  // x^2-1 mod 7
  REQUIRE(fm.size() == 2);
  // x^2+x-1 mod 5 = (x+3)^2
  auto fm5 = factor_mod_p(g, 5);
  REQUIRE(fm5.size() == 1);
  CHECK(fm5[0].second == 2);
  CHECK(fm5[0].first.c == std::vector<Int>({3, 1}));
}

TEST_CASE("resultant") {
  // res(x^2-1, x-2) = (2^2-1) = 3
  QPoly a(std::vector<Rat>{-1, 0, 1});
  QPoly b(std::vector<Rat>{-2, 1});
  CHECK(resultant(a, b) == Rat(3));
  // res(x^2+x-1, A) with A = 1 + x/8: computed by hand = 55/64
  QPoly m(std::vector<Rat>{-1, 1, 1});
  QPoly A(std::vector<Rat>{1, Rat(1, 8)});
  CHECK(resultant(m, A) == Rat(55, 64));
}

TEST_CASE("number field Q(sqrt5) via x^2+x-1") {
  const NumberField* K = NumberField::get(ZPoly(std::vector<Int>{-1, 1, 1}));
  REQUIRE(K->deg == 2);
  NFElem th = K->theta();  // golden-ratio-conjugate root
  CHECK(K->trace(th) == Rat(-1));
  CHECK(K->norm(th) == Rat(-1));
  // (15+sqrt5)/16 = 1 + theta/8 where theta = (-1+sqrt5)/2
  NFElem a = NFElem(Rat(1)) + NFElem(Rat(1, 8)) * th;
  CHECK(K->norm(a) == Rat(55, 64));
  // inverse
  NFElem inv = NFElem(Rat(1)) / a;
  CHECK(inv * a == NFElem(Rat(1)));

  // primes above 5: ramified, e=2 f=1
  auto p5 = K->primes_above(Int(5));
  REQUIRE(p5.size() == 1);
  CHECK(p5[0].e == 2);
  CHECK(p5[0].f == 1);
  CHECK(K->val(p5[0], a) == 1);   // v_lambda((15+sqrt5)/16): norm valuation 1
  CHECK(K->val(p5[0], NFElem(Rat(5))) == 2);
  CHECK(K->val(p5[0], th) == 0);

  // primes above 11: split (11 = +-(golden units): x^2+x-1 mod 11 = (x-3)(x+4))
  auto p11 = K->primes_above(Int(11));
  REQUIRE(p11.size() == 2);
  CHECK(p11[0].e == 1);
  CHECK(p11[0].f == 1);
  // theta - 3 has positive valuation at exactly one of them
  NFElem t3 = th - NFElem(Rat(3));
  long v0 = K->val(p11[0], t3), v1 = K->val(p11[1], t3);
  CHECK(((v0 == 1 && v1 == 0) || (v0 == 0 && v1 == 1)));
  CHECK(K->val(p11[0], NFElem(Rat(11))) == 1);

  // primes above 2: inert
  auto p2 = K->primes_above(Int(2));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].f == 2);
  CHECK(K->val(p2[0], NFElem(Rat(1, 2))) == -1);
}

TEST_CASE("cyclotomic field arithmetic") {
  const NumberField* K = NumberField::cyclotomic_field(5);
  REQUIRE(K->deg == 4);
  NFElem z = K->theta();
  // 1 + z + z^2 + z^3 + z^4 = 0
  NFElem s = NFElem(Rat(1)) + z + z * z + z * z * z + z * z * z * z;
  CHECK(s == NFElem(Rat(0)));
  CHECK(K->norm(NFElem(Rat(1)) - z) == Rat(5));  // norm of 1 - zeta_5
}

TEST_CASE("ball arithmetic basics") {
  mpfr_prec_t prec = 128;
  RBall two = RBall::exact(Rat(2), prec);
  RBall s = sqrt(two);
  RBall s2 = s * s;
  RBall diff = s2 - two;
  CHECK(diff.abs_upper_d() < 1e-35);
  CHECK(diff.rad_d() > 0);

  RBall x = RBall::exact(Rat(7, 3), prec);
  RBall lx = log(x);
  RBall elx = exp(lx);
  CHECK((elx - x).abs_upper_d() < 1e-35);

  // Gamma(1, x) = e^{-x}
  RBall one = RBall::exact(Rat(1), prec);
  RBall g = gamma_inc(one, x);
  RBall e = exp(-x);
  CHECK((g - e).abs_upper_d() < 1e-35);

  // Gamma(5) = 24
  CHECK((gamma(RBall::exact(Rat(5), prec)) - RBall::exact(Rat(24), prec)).abs_upper_d() < 1e-35);

  // digamma(1) = -euler gamma ~ -0.5772156649
  RBall d = digamma(one);
  CHECK(d.mid_d() == doctest::Approx(-0.5772156649).epsilon(1e-9));

  // cis
  CBall c = cis_2pi(Rat(1, 4), prec);
  CHECK(c.re.abs_upper_d() < 1e-35);
  CHECK(c.im.mid_d() == doctest::Approx(1.0));

  // pow_rat
  RBall p = pow_rat(RBall::exact(Rat(4), prec), Rat(1, 2));
  CHECK((p - two).abs_upper_d() < 1e-30);
}
