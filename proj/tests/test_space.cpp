#include <doctest.h>

#include "modsym/dims.hpp"
#include "modsym/qexp.hpp"
#include "modsym/space.hpp"

using namespace msadj;

namespace {

QSpace make_space(long N, long k, const char* lbl = nullptr) {
  DirichletChar chi = lbl ? DirichletChar::from_label(lbl) : DirichletChar::trivial(N);
  return QSpace(Int(N), k, chi);
}

// apply operator given by columns to a row vector of coordinates
std::vector<Rat> apply(const QMat& M, const std::vector<Rat>& x) { return M.apply(x); }

bool is_scalar(const QMat& M, const Rat& s) {
  for (long i = 0; i < M.nr; i++)
    for (long j = 0; j < M.nc; j++)
      if (M.at(i, j) != (i == j ? s : Rat(0))) return false;
  return true;
}

}  // namespace

TEST_CASE("space dimensions match the closed formulas") {
  struct Case {
    long N, k;
    const char* lbl;
  };
  for (auto [N, k, lbl] : {Case{11, 2, nullptr}, Case{23, 2, nullptr}, Case{37, 2, nullptr},
                           Case{44, 2, nullptr}, Case{99, 2, nullptr}, Case{1, 12, nullptr},
                           Case{5, 4, nullptr}, Case{4, 12, nullptr}, Case{9, 12, nullptr},
                           Case{8, 2, nullptr}, Case{5, 4, "5.4"}, Case{92, 2, nullptr}}) {
    DirichletChar chi = lbl ? DirichletChar::from_label(lbl) : DirichletChar::trivial(N);
    QSpace sp(Int(N), k, chi);
    Int expect = 2 * dim_cusp(N, k, chi) + dim_eis(N, k, chi);
    CAPTURE(N);
    CAPTURE(k);
    CHECK(Int(sp.dim) == expect);
    // cuspidal rank
    CHECK(Int((long)sp.cuspidal.nr) == 2 * dim_cusp(N, k, chi));
    CHECK(Int(rank(sp.boundary_basis)) == dim_eis(N, k, chi));
  }
  // parity-collapsed space
  QSpace zero(Int(11), 3, DirichletChar::trivial(11));
  CHECK(zero.dim == 0);
}

TEST_CASE("space over cyclotomic coefficients") {
  // level 5, weight 3, quartic odd character
  DirichletChar chi = DirichletChar::from_label("5.2");
  ManinSpace<NFElem> sp(Int(5), 3, chi);
  CHECK(sp.dim == dim_cusp(5, 3, chi).get_si() * 2 + dim_eis(5, 3, chi).get_si());
  CHECK(sp.dim == 2);  // two Eisenstein series, no cusp forms
  // The two Eisenstein eigensystems are a_p = 1 + chi(p) p^2 and chi(p) + p^2.
  // This pins the direction of the character convention (chi vs conjugate):
  // the eigenvalue multiset is not conjugation-invariant.
  const NumberField* K = NumberField::cyclotomic_field(4);
  for (long p : {2, 3, 7}) {
    Mat<NFElem> T = sp.hecke(p);
    NFElem cp = chi.value_nf(p, K);
    NFElem e1 = NFElem(Rat(1)) + cp * NFElem(Rat(p * p));
    NFElem e2 = cp + NFElem(Rat(p * p));
    Poly<NFElem> x = Poly<NFElem>::x();
    Poly<NFElem> want = (x - Poly<NFElem>::constant(e1)) * (x - Poly<NFElem>::constant(e2));
    CHECK(charpoly(T) == want);
  }
}

TEST_CASE("boundary is well-defined on the quotient") {
  for (auto [N, k] : {std::pair<long, long>{11, 2}, {44, 2}, {1, 12}, {5, 4}, {9, 12}}) {
    QSpace sp = make_space(N, k);
    for (long v = 0; v < sp.ngen; v++) {
      std::vector<Rat> viaq = sp.boundary_basis.apply(sp.gen2basis.row(v));
      for (long r = 0; r < sp.ncusp; r++) CHECK(viaq[r] == sp.boundary_gens.at(r, v));
    }
  }
}

TEST_CASE("continued fraction paths reproduce direct projection") {
  for (auto [N, k] : {std::pair<long, long>{11, 2}, {44, 2}, {1, 12}, {5, 4}}) {
    QSpace sp = make_space(N, k);
    for (long cls = 0; cls < sp.p1.size(); cls++) {
      const M22& g0 = sp.p1.lifts[cls];
      for (long i = 0; i <= sp.m; i++) {
        std::vector<Rat> Q(sp.m + 1, Rat(0));
        Q[i] = 1;
        auto direct = sp.project(g0, Q);
        auto viapath = sp.path_symbol(g0, rho_poly(g0, Q));
        CHECK(direct == viapath);
      }
    }
  }
}

TEST_CASE("level 11 weight 2: hecke eigenvalues, star, fricke") {
  QSpace sp = make_space(11, 2);
  REQUIRE(sp.dim == 3);
  REQUIRE(sp.cuspidal.nr == 2);
  auto a = qexp_11a(30);
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
    QMat T = sp.hecke(p);
    for (long r = 0; r < sp.cuspidal.nr; r++) {
      auto img = T.apply(sp.cuspidal.row(r));
      std::vector<Rat> want = sp.cuspidal.row(r);
      for (auto& x : want) x *= Rat(a[p]);
      CHECK(img == want);
    }
  }
  QMat W = sp.atkin_lehner();
  CHECK(W * W == QMat::identity(3));  // N^(k-2) = 1
  // fricke eigenvalue -1 on the cuspidal part
  for (long r = 0; r < sp.cuspidal.nr; r++) {
    auto img = W.apply(sp.cuspidal.row(r));
    std::vector<Rat> want = sp.cuspidal.row(r);
    for (auto& x : want) x = -x;
    CHECK(img == want);
  }
  QMat S = sp.star();
  CHECK(S * S == QMat::identity(3));
  QMat T2 = sp.hecke(2);
  CHECK(S * T2 == T2 * S);
  CHECK(W * T2 == T2 * W);
}

TEST_CASE("level 1 weight 12 and level 5 weight 4 eigenvalues") {
  {
    QSpace sp = make_space(1, 12);
    REQUIRE(sp.cuspidal.nr == 2);
    auto a = qexp_delta(25);
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
      QMat T = sp.hecke(p);
      for (long r = 0; r < sp.cuspidal.nr; r++) {
        auto img = T.apply(sp.cuspidal.row(r));
        std::vector<Rat> want = sp.cuspidal.row(r);
        for (auto& x : want) x *= Rat(a[p]);
        CHECK(img == want);
      }
    }
  }
  {
    QSpace sp = make_space(5, 4);
    REQUIRE(sp.cuspidal.nr == 2);
    auto a = qexp_5w4(25);
    for (long p : {2, 3, 5, 7, 11, 13}) {
      QMat T = sp.hecke(p);
      for (long r = 0; r < sp.cuspidal.nr; r++) {
        auto img = T.apply(sp.cuspidal.row(r));
        std::vector<Rat> want = sp.cuspidal.row(r);
        for (auto& x : want) x *= Rat(a[p]);
        CHECK(img == want);
      }
    }
    QMat W = sp.atkin_lehner();
    CHECK(W * W == QMat::identity(sp.dim) * Rat(25));  // N^(k-2)
  }
}

TEST_CASE("hecke operators commute") {
  QSpace sp = make_space(44, 2);
  QMat T3 = sp.hecke(3), T5 = sp.hecke(5), U2 = sp.hecke(2), U11 = sp.hecke(11);
  CHECK(T3 * T5 == T5 * T3);
  CHECK(U2 * T3 == T3 * U2);
  CHECK(U2 * U11 == U11 * U2);
  QMat S = sp.star();
  CHECK(S * S == QMat::identity(sp.dim));
  CHECK(S * T3 == T3 * S);
  CHECK(S * U2 == U2 * S);
}
