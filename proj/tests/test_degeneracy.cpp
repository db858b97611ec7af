#include <doctest.h>

#include "hecke/degeneracy.hpp"
#include "hecke/newforms.hpp"

using namespace msadj;

namespace {

bool in_subgroup(const M22& g, const Int& t, const Int& L) {
  return g.det() == 1 && mod(g.b, t) == 0 && mod(g.c, L) == 0;
}

void check_cosets(long N, long t, long L, long want_index) {
  auto reps = transfer_cosets(Int(N), Int(t), Int(L));
  CHECK(transfer_index(Int(N), Int(t), Int(L)) == want_index);
  REQUIRE((long)reps.size() == want_index);
  for (auto& g : reps) {
    CHECK(g.det() == 1);
    CHECK(mod(g.c, Int(N)) == 0);
  }
  for (size_t i = 0; i < reps.size(); i++)
    for (size_t j = 0; j < reps.size(); j++)
      CHECK(in_subgroup(reps[i] * reps[j].adj(), Int(t), Int(L)) == (i == j));
}

std::vector<Rat> full_vec(const QSpace& sp, const NewformRecord& f) {
  std::vector<Rat> x(sp.dim, Rat(0));
  REQUIRE((long)f.eigvec.size() == sp.cuspidal.nr);
  for (long i = 0; i < sp.cuspidal.nr; i++) {
    Rat ci = f.eigvec[i].rational();
    for (long j = 0; j < sp.dim; j++) x[j] += ci * sp.cuspidal.at(i, j);
  }
  return x;
}

bool is_zero(const std::vector<Rat>& v) {
  for (auto& x : v) if (x != 0) return false;
  return true;
}

bool is_scalar(const Mat<Rat>& M, const Rat& s) {
  if (M.nr != M.nc) return false;
  for (long i = 0; i < M.nr; i++)
    for (long j = 0; j < M.nc; j++)
      if (M.at(i, j) != (i == j ? s : Rat(0))) return false;
  return true;
}

// gamma x_f lands in the f-isotypic old part: killed by U_p for p dividing
// dst.N/src.N, eigen for everything else up to the determining bound.
void check_kill_pattern(const QSpace& src, const QSpace& dst, const NewformRecord& f) {
  auto gam = degeneracy_gamma(src, dst);
  auto v = gam.mat.apply(full_vec(src, f));
  CHECK(!is_zero(v));
  Int Msig = dst.N / src.N;
  for (Int q : primes_up_to(sturm_bound(dst.N, dst.k))) {
    auto w = dst.hecke(q).apply(v);
    if (mod(Msig, q) == 0) {
      CHECK(is_zero(w));  // deprived coefficient
    } else {
      NFElem aq = f.eigenvalue(q);
      Rat a = aq.rational();
      for (long i = 0; i < dst.dim; i++) w[i] -= a * v[i];
      CHECK(is_zero(w));
    }
  }
}

}  // namespace

TEST_CASE("transfer coset enumerations are complete and distinct") {
  check_cosets(11, 1, 44, 6);
  check_cosets(11, 2, 22, 6);
  check_cosets(11, 4, 11, 6);
  check_cosets(11, 3, 33, 12);
  check_cosets(11, 9, 11, 12);
  check_cosets(11, 11, 11, 11);
  check_cosets(1, 2, 2, 6);
  check_cosets(2, 6, 4, 16);
}

TEST_CASE("transfers compose through intermediate levels") {
  QSpace sp11(Int(11), 2, DirichletChar::trivial(Int(11)));
  QSpace sp22(Int(22), 2, DirichletChar::trivial(Int(22)));
  QSpace sp44(Int(44), 2, DirichletChar::trivial(Int(44)));

  auto direct = level_transfer(sp11, sp44, Int(2));
  auto a = matmul(level_transfer(sp22, sp44, Int(1)), level_transfer(sp11, sp22, Int(2)));
  auto b = matmul(level_transfer(sp22, sp44, Int(2)), level_transfer(sp11, sp22, Int(1)));
  CHECK((direct - a).is_zero());
  CHECK((direct - b).is_zero());
}

TEST_CASE("empty prime set gives the identity") {
  QSpace sp(Int(11), 2, DirichletChar::trivial(Int(11)));
  auto gam = degeneracy_gamma(sp, sp);
  CHECK(gam.norm_constant == 1);
  CHECK((gam.mat - identity_mat<Rat>(sp.dim)).is_zero());
}

TEST_CASE("gamma deprives exactly the chosen coefficients") {
  QSpace sp11(Int(11), 2, DirichletChar::trivial(Int(11)));
  auto f11 = newform_decomposition(sp11, 24);
  REQUIRE(f11.size() == 1);

  SUBCASE("level 11 adjoining 2") {
    QSpace dst(Int(44), 2, DirichletChar::trivial(Int(44)));
    check_kill_pattern(sp11, dst, f11[0]);
  }
  SUBCASE("level 11 adjoining 3") {
    QSpace dst(Int(99), 2, DirichletChar::trivial(Int(99)));
    check_kill_pattern(sp11, dst, f11[0]);
  }
  SUBCASE("level 1 weight 12 adjoining 2") {
    QSpace src(Int(1), 12, DirichletChar::trivial(Int(1)));
    auto fs = newform_decomposition(src, 6);
    REQUIRE(fs.size() == 1);
    QSpace dst(Int(4), 12, DirichletChar::trivial(Int(4)));
    check_kill_pattern(src, dst, fs[0]);
  }
}

TEST_CASE("local mass factors") {
  NFElem one(Rat(1));
  CHECK(gtg_local_factor(0, false, NFElem(Rat(17)), one, 2, Int(7)) == one);
  CHECK(gtg_local_factor(2, false, NFElem(Rat(-2)), one, 2, Int(2)) == NFElem(Rat(5) / Rat(4)));
  CHECK(gtg_local_factor(2, false, NFElem(Rat(-24)), one, 12, Int(2)) == NFElem(Rat(2160)));
  CHECK(gtg_local_factor(2, false, NFElem(Rat(-1)), one, 2, Int(3)) == NFElem(Rat(10) / Rat(3)));
  CHECK(gtg_local_factor(1, true, one, one, 2, Int(11)) == NFElem(Rat(-120) / Rat(121)));
  CHECK(gtg_local_factor(1, false, NFElem(Rat(7)), one, 3, Int(5)) == NFElem(Rat(-28) / Rat(5)));
}

TEST_CASE("adjoint product of gamma is the predicted scalar mass") {
  QSpace sp11(Int(11), 2, DirichletChar::trivial(Int(11)));

  SUBCASE("level 11 adjoining 2: 5/4") {
    QSpace dst(Int(44), 2, DirichletChar::trivial(Int(44)));
    auto gam = degeneracy_gamma(sp11, dst);
    auto m = gamma_adjoint_product(sp11, dst, gam.mat);
    CHECK(is_scalar(m, Rat(5) / Rat(4)));
  }
  SUBCASE("level 11 adjoining 3: 10/3") {
    QSpace dst(Int(99), 2, DirichletChar::trivial(Int(99)));
    auto gam = degeneracy_gamma(sp11, dst);
    auto m = gamma_adjoint_product(sp11, dst, gam.mat);
    CHECK(is_scalar(m, Rat(10) / Rat(3)));
  }
  SUBCASE("level 11 adjoining its own bad prime: -120/121") {
    QSpace dst(Int(121), 2, DirichletChar::trivial(Int(121)));
    auto gam = degeneracy_gamma(sp11, dst);
    auto m = gamma_adjoint_product(sp11, dst, gam.mat);
    CHECK(is_scalar(m, Rat(-120) / Rat(121)));
  }
  SUBCASE("level 1 weight 12 adjoining 2: 2160") {
    QSpace src(Int(1), 12, DirichletChar::trivial(Int(1)));
    QSpace dst(Int(4), 12, DirichletChar::trivial(Int(4)));
    auto gam = degeneracy_gamma(src, dst);
    auto m = gamma_adjoint_product(src, dst, gam.mat);
    CHECK(is_scalar(m, Rat(2160)));
  }
}
