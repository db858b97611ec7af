#include <doctest.h>

#include <iostream>

#include "congruence/badprimes.hpp"
#include "congruence/eta.hpp"
#include "congruence/selmer.hpp"

using namespace msadj;

namespace {

NewformRecord first_new(const QSpace& sp, long bound) {
  for (auto& r : newform_decomposition(sp, bound))
    if (r.is_new) return r;
  throw std::runtime_error("no newform");
}

void dump(const char* tag, const EtaResult& e) {
  std::cout << tag << " level=" << e.level.get_str() << " vals:";
  for (auto& [l, i, v] : e.vals)
    std::cout << " (" << l.get_str() << "," << i << "," << v << ")";
  std::cout << " excluded:";
  for (auto& l : e.excluded) std::cout << " " << l.get_str();
  std::cout << " skipped:";
  for (auto& l : e.skipped) std::cout << " " << l.get_str();
  std::cout << " gens:";
  for (auto& g : e.generators) {
    if (!e.K)
      std::cout << " " << g.rational().get_str();
    else
      std::cout << " N(" << e.K->norm(g).get_str() << ")";
  }
  std::cout << "\n";
}

void dump_check(const char* tag, const ScalingCheck& c) {
  std::cout << tag << " p=" << c.p.get_str() << " all_pass=" << c.all_pass
            << " rows:";
  for (auto& r : c.rows)
    std::cout << " [" << r.ell.get_str() << "," << r.index << ": " << r.v_base
              << "->" << r.v_extended << " want+" << r.v_factor
              << (r.pass ? " ok" : " FAIL") << (r.screened ? " screened" : "")
              << "]";
  std::cout << "\n";
}

}  // namespace

TEST_CASE("probe") {
  QSpace s11(Int(11), 2, DirichletChar::trivial(Int(11)));
  QSpace s1(Int(1), 12, DirichletChar::trivial(Int(1)));
  QSpace s23(Int(23), 2, DirichletChar::trivial(Int(23)));
  auto f11 = first_new(s11, 50);
  auto fD = first_new(s1, 50);
  auto f23 = first_new(s23, 50);

  dump("eta(11a,{})", eta_ideal(f11, {}));
  dump("eta(11a,{2})", eta_ideal(f11, {Int(2)}));
  dump("eta(11a,{3})", eta_ideal(f11, {Int(3)}));
  dump("eta(D,{})", eta_ideal(fD, {}));
  dump("eta(D,{2})", eta_ideal(fD, {Int(2)}));
  dump("eta(D,{3})", eta_ideal(fD, {Int(3)}));
  dump("eta(23a,{})", eta_ideal(f23, {}));
  dump("eta(23a,{2})", eta_ideal(f23, {Int(2)}));
  dump("eta(23a,{3})", eta_ideal(f23, {Int(3)}));

  dump_check("scal(11a)", eta_scaling_check(f11, {}, Int(2)));
  dump_check("scal(11a)", eta_scaling_check(f11, {}, Int(3)));
  dump_check("scal(D)", eta_scaling_check(fD, {}, Int(2)));
  dump_check("scal(D)", eta_scaling_check(fD, {}, Int(3)));
  dump_check("scal(23a)", eta_scaling_check(f23, {}, Int(2)));
  dump_check("scal(23a)", eta_scaling_check(f23, {}, Int(3)));

  QSpace s44(Int(44), 2, DirichletChar::trivial(Int(44)));
  auto f44 = first_new(s44, 50);
  dump("eta(44a,{})", eta_ideal(f44, {}));
  dump_check("scal(44a)", eta_scaling_check(f44, {}, Int(2)));

  auto recs11 = newform_decomposition(s11, 30);
  std::cout << "cmod(11)=" << congruence_module_order(s11, recs11, 0).get_str()
            << "\n";
  QSpace s37(Int(37), 2, DirichletChar::trivial(Int(37)));
  auto recs37 = newform_decomposition(s37, 30);
  std::cout << "cmod(37,0)=" << congruence_module_order(s37, recs37, 0).get_str()
            << " cmod(37,1)=" << congruence_module_order(s37, recs37, 1).get_str()
            << "\n";
  auto recs23 = newform_decomposition(s23, 30);
  std::cout << "cmod(23)=" << congruence_module_order(s23, recs23, 0).get_str()
            << "\n";

  auto bD = bad_prime_set(fD, 50);
  std::cout << "bad(D): div:";
  for (auto& l : bD.divisor_exclusions) std::cout << " " << l.get_str();
  std::cout << " red:";
  for (auto& s : bD.reducible)
    std::cout << " " << s.ell.get_str() << "/" << s.index << " [" << s.witness
              << "]";
  std::cout << " dih:";
  for (auto& l : bD.dihedral_window) std::cout << " " << l.get_str();
  std::cout << " low=" << bD.low_confidence << "\n";

  auto b11 = bad_prime_set(f11, 50);
  std::cout << "bad(11a): div:";
  for (auto& l : b11.divisor_exclusions) std::cout << " " << l.get_str();
  std::cout << " red:";
  for (auto& s : b11.reducible)
    std::cout << " " << s.ell.get_str() << "/" << s.index << " [" << s.witness
              << "]";
  std::cout << " dih:";
  for (auto& l : b11.dihedral_window) std::cout << " " << l.get_str();
  std::cout << " low=" << b11.low_confidence << "\n";

  auto b23 = bad_prime_set(f23, 50);
  std::cout << "bad(23a): div:";
  for (auto& l : b23.divisor_exclusions) std::cout << " " << l.get_str();
  std::cout << " red:";
  for (auto& s : b23.reducible)
    std::cout << " " << s.ell.get_str() << "/" << s.index << " [" << s.witness
              << "]";
  std::cout << " dih:";
  for (auto& l : b23.dihedral_window) std::cout << " " << l.get_str();
  std::cout << " low=" << b23.low_confidence << " scanned=" << b23.scanned << "\n";

  auto sel = selmer_prediction(fD, {}, eta_ideal(fD, {}), bD);
  std::cout << "selmer(D,{}):";
  for (auto& e : sel.entries)
    std::cout << " [" << e.ell.get_str() << "," << e.index << ": "
              << (e.predicted ? std::to_string(e.length) : std::string("nopred(") + e.note + ")")
              << "]";
  std::cout << "\n";
  auto sel23 = selmer_prediction(f23, {Int(3)}, eta_ideal(f23, {Int(3)}), b23);
  std::cout << "selmer(23a,{3}):";
  for (auto& e : sel23.entries)
    std::cout << " [" << e.ell.get_str() << "," << e.index << ": "
              << (e.predicted ? std::to_string(e.length) : std::string("nopred(") + e.note + ")")
              << "]";
  std::cout << "\n";
}
