#include <doctest.h>

#include <cmath>

#include "hecke/newforms.hpp"
#include "modsym/qexp.hpp"

using namespace msadj;

namespace {

// a_n of a rational record as plain integers
std::vector<Int> an_int(const NewformRecord& f, long n) {
  auto a = an_from_ap(f, n);
  std::vector<Int> out(n + 1, Int(0));
  for (long i = 1; i <= n; i++) {
    Rat v = a[i].rational();
    REQUIRE(v.get_den() == 1);
    out[i] = v.get_num();
  }
  return out;
}

const NewformRecord& only_new(const std::vector<NewformRecord>& recs) {
  REQUIRE(recs.size() == 1);
  REQUIRE(recs[0].is_new);
  return recs[0];
}

// |a_q| <= 2 q^((k-1)/2) in every real embedding, via crude root isolation
void check_hasse(const NewformRecord& f) {
  std::vector<double> roots;
  long d = f.field_poly.deg();
  if (d == 1) {
    roots.push_back(-f.field_poly.c[0].get_d());
  } else {
    // sample the polynomial on a grid and bisect sign changes
    auto ev = [&](double x) {
      double s = 0, p = 1;
      for (long i = 0; i <= d; i++, p *= x) s += f.field_poly.c[i].get_d() * p;
      return s;
    };
    double lo = -1e3;
    for (double x = -1e3; x <= 1e3; x += 1.0 / 16) {
      if (ev(lo) == 0) roots.push_back(lo);
      if (ev(lo) * ev(x) < 0) {
        double a = lo, b = x;
        for (int i = 0; i < 80; i++) {
          double mid = (a + b) / 2;
          (ev(a) * ev(mid) <= 0 ? b : a) = mid;
        }
        roots.push_back((a + b) / 2);
      }
      lo = x;
    }
    REQUIRE((long)roots.size() == d);  // coefficient fields here are totally real
  }
  for (auto& [p, aval] : f.ap) {
    if (mod(f.level, p) == 0) continue;
    for (double th : roots) {
      double e = 0, pw = 1;
      for (size_t i = 0; i < aval.c.size(); i++, pw *= th) e += aval.c[i].get_d() * pw;
      double bound = 2 * std::pow(p.get_d(), (f.weight - 1) / 2.0);
      CHECK(std::abs(e) <= bound * (1 + 1e-9));
    }
  }
}

}  // namespace

TEST_CASE("level 11 weight 2: the eigensystem matches the eta-product expansion") {
  QSpace sp(Int(11), 2, DirichletChar::trivial(Int(11)));
  auto recs = newform_decomposition(sp, 30);
  const auto& f = only_new(recs);
  CHECK(f.level == 11);
  CHECK(f.field_poly.deg() == 1);
  auto got = an_int(f, 30);
  auto want = qexp_11a(30);
  for (long n = 1; n <= 30; n++) CHECK(got[n] == want[n]);
  CHECK(f.local_types.size() == 1);
  CHECK(f.local_types[0].p == 11);
  CHECK(f.local_types[0].delta == 1);
  CHECK(f.local_types[0].cls == "special");
  CHECK(fricke_sign(sp, f) == Rat(-1));
}

TEST_CASE("level 1 weight 12: the eigensystem matches the discriminant form") {
  QSpace sp(Int(1), 12, DirichletChar::trivial(Int(1)));
  auto recs = newform_decomposition(sp, 30);
  const auto& f = only_new(recs);
  CHECK(f.local_types.empty());
  auto got = an_int(f, 30);
  auto want = qexp_delta(30);
  for (long n = 1; n <= 30; n++) CHECK(got[n] == want[n]);
  CHECK(fricke_sign(sp, f) == Rat(1));
}

TEST_CASE("level 5 weight 4: the eigensystem matches the eta-product expansion") {
  QSpace sp(Int(5), 4, DirichletChar::trivial(Int(5)));
  auto recs = newform_decomposition(sp, 30);
  const auto& f = only_new(recs);
  auto got = an_int(f, 30);
  auto want = qexp_5w4(30);
  for (long n = 1; n <= 30; n++) CHECK(got[n] == want[n]);
  // U_5 eigenvalue directly
  CHECK(f.eigenvalue(Int(5)) == NFElem(Rat(-5)));
}

TEST_CASE("level 23 weight 2: quadratic coefficient field") {
  QSpace sp(Int(23), 2, DirichletChar::trivial(Int(23)));
  auto recs = newform_decomposition(sp, 13);
  const auto& f = only_new(recs);
  REQUIRE(f.field_poly.deg() == 2);
  // x^2 + x - 1
  CHECK(f.field_poly.c == std::vector<Int>{Int(-1), Int(1), Int(1)});
  NFElem a2 = f.eigenvalue(Int(2));
  CHECK(a2 * a2 + a2 - NFElem(Rat(1)) == NFElem(Rat(0)));
  // the orbit is closed under conjugation, so traces are rational integers
  for (auto& [p, a] : f.ap) {
    Rat tr = f.K->trace(a);
    CHECK(tr.get_den() == 1);
  }
  check_hasse(f);
}

TEST_CASE("level 37 weight 2: two rational orbits") {
  QSpace sp(Int(37), 2, DirichletChar::trivial(Int(37)));
  auto recs = newform_decomposition(sp, 10);
  REQUIRE(recs.size() == 2);
  for (auto& f : recs) {
    CHECK(f.is_new);
    CHECK(f.field_poly.deg() == 1);
    check_hasse(f);
  }
  // sorted deterministically: a_2 = -2 record first (ap comparison)
  CHECK(recs[0].eigenvalue(Int(2)) == NFElem(Rat(-2)));
  CHECK(recs[0].eigenvalue(Int(3)) == NFElem(Rat(-3)));
  CHECK(recs[1].eigenvalue(Int(2)) == NFElem(Rat(0)));
  CHECK(recs[1].eigenvalue(Int(3)) == NFElem(Rat(1)));
}

TEST_CASE("level 44 weight 2: old and new orbits separated by transfer rank") {
  QSpace sp(Int(44), 2, DirichletChar::trivial(Int(44)));
  auto recs = newform_decomposition(sp, 10);
  REQUIRE(recs.size() == 2);
  const NewformRecord* nw = nullptr;
  const NewformRecord* old = nullptr;
  for (auto& f : recs) (f.is_new ? nw : old) = &f;
  REQUIRE(nw != nullptr);
  REQUIRE(old != nullptr);

  CHECK(nw->level == 44);
  CHECK(nw->block.nr == 2);
  CHECK(nw->field_poly.deg() == 1);
  check_hasse(*nw);
  // p = 2: conductor exponent 2, unramified character: neither test fires
  REQUIRE(nw->local_types.size() == 2);
  CHECK(nw->local_types[0].p == 2);
  CHECK(nw->local_types[0].delta == 0);
  CHECK(nw->local_types[0].cls == "supercuspidal");
  CHECK(nw->local_types[1].p == 11);
  CHECK(nw->local_types[1].delta == 1);

  CHECK(old->level == 11);
  CHECK(old->ambient_level == 44);
  CHECK(old->block.nr == 6);  // three copies of a 2-dimensional orbit
  CHECK(old->eigvec.empty());
  auto want = qexp_11a(10);
  auto got = an_int(*old, 10);
  for (long n = 1; n <= 10; n++) CHECK(got[n] == want[n]);
}

TEST_CASE("coefficient bound below the determining bound leaves a warning") {
  QSpace sp(Int(11), 2, DirichletChar::trivial(Int(11)));
  auto recs = newform_decomposition(sp, 1);
  REQUIRE(recs.size() == 1);
  bool warned = false;
  for (auto& w : recs[0].warnings) warned |= w.find("below the Sturm") != std::string::npos;
  CHECK(warned);
}

TEST_CASE("sturm bounds") {
  CHECK(sturm_bound(Int(1), 12) == 1);
  CHECK(sturm_bound(Int(11), 2) == 2);
  CHECK(sturm_bound(Int(44), 2) == 12);
  CHECK(sturm_bound(Int(99), 2) == 24);
}
