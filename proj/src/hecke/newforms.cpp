#include "hecke/newforms.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "hecke/degeneracy.hpp"

namespace msadj {

NFElem NewformRecord::eigenvalue(const Int& p) const {
  for (auto& [q, a] : ap)
    if (q == p) return a;
  throw std::domain_error("eigenvalue at " + p.get_str() + " not recorded");
}

namespace {

Mat<NFElem> promote(const Mat<Rat>& A) {
  Mat<NFElem> B(A.nr, A.nc);
  for (long i = 0; i < A.nr; i++)
    for (long j = 0; j < A.nc; j++) B.at(i, j) = NFElem(A.at(i, j));
  return B;
}

Mat<Rat> poly_at(const ZPoly& h, const Mat<Rat>& A) {  // h(A)
  Mat<Rat> R(A.nr, A.nc);
  Mat<Rat> P = identity_mat<Rat>(A.nr);
  for (long i = 0; i <= h.deg(); i++) {
    R = R + P * Rat(h.c[i]);
    if (i < h.deg()) P = matmul(P, A);
  }
  return R;
}

const Mat<Rat>& hecke_cusp(const QSpace& sp, std::map<long, Mat<Rat>>& cache, long p) {
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, restrict_to_rows(sp.cuspidal, sp.hecke(Int(p)))).first;
  return it->second;
}

// cut the cuspidal space into isotypic blocks with T_q, q prime to the level
std::vector<Mat<Rat>> split_blocks(const QSpace& sp, std::map<long, Mat<Rat>>& cache) {
  std::vector<Mat<Rat>> blocks;
  long c = sp.cuspidal.nr;
  if (c == 0) return blocks;
  blocks.push_back(identity_mat<Rat>(c));
  for (long q : primes_up_to(sturm_bound(sp.N, sp.k))) {
    if (mod(sp.N, Int(q)) == 0) continue;
    const Mat<Rat>& Tq = hecke_cusp(sp, cache, q);
    std::vector<Mat<Rat>> next;
    for (auto& B : blocks) {
      Mat<Rat> TB = restrict_to_rows(B, Tq);
      auto fs = factor_zpoly(to_zpoly(charpoly(TB)));
      if (fs.size() == 1) {
        next.push_back(B);
        continue;
      }
      for (auto& [h, e] : fs) {
        Mat<Rat> hA = poly_at(h, TB);
        Mat<Rat> Pw = identity_mat<Rat>(TB.nr);
        for (long i = 0; i < e; i++) Pw = matmul(Pw, hA);
        next.push_back(matmul(kernel(Pw), B));
      }
    }
    blocks = std::move(next);
  }
  return blocks;
}

bool subspace_of(const Mat<Rat>& B, const Mat<Rat>& O) {
  if (O.nr == 0) return B.nr == 0;
  Mat<Rat> S(O.nr + B.nr, O.nc);
  for (long i = 0; i < O.nr; i++) S.set_row(i, O.row(i));
  for (long i = 0; i < B.nr; i++) S.set_row(O.nr + i, B.row(i));
  return rank(S) == rank(O);
}

// ambient cuspidal span of all transfer images of a divisor-level block
Mat<Rat> old_span_of(const QSpace& spM, const Mat<Rat>& blockM, const QSpace& sp) {
  Mat<Rat> full = matmul(blockM, spM.cuspidal);
  Mat<Rat> CT = sp.cuspidal.transpose();
  std::vector<std::vector<Rat>> rows;
  for (const Int& t : divisors(sp.N / spM.N)) {
    Mat<Rat> Lt = level_transfer(spM, sp, t);
    for (long i = 0; i < full.nr; i++) {
      auto v = Lt.apply(full.row(i));
      std::vector<Rat> x;
      if (!solve(CT, v, x)) throw std::logic_error("old_span_of: transfer image not cuspidal");
      rows.push_back(std::move(x));
    }
  }
  Mat<Rat> O((long)rows.size(), sp.cuspidal.nr);
  for (long i = 0; i < O.nr; i++) O.set_row(i, rows[i]);
  return O;
}

void extract_eigendata(const QSpace& sp, std::map<long, Mat<Rat>>& cache, NewformRecord& rec,
                       long bound) {
  const Mat<Rat>& B = rec.block;
  if (B.nr % 2) throw std::logic_error("eigensystem block of odd dimension");
  long deg = B.nr / 2;
  long sb = std::max(rec.sturm, 2L);

  // a generating operator: restriction with irreducible characteristic factor
  // of full degree, single T_q first, then small linear combinations
  Mat<Rat> A;
  ZPoly h;
  bool found = false;
  std::vector<long> qs;
  for (long q : primes_up_to(sb))
    if (mod(sp.N, Int(q)) != 0) qs.push_back(q);
  for (long q : qs) {
    Mat<Rat> TB = restrict_to_rows(B, hecke_cusp(sp, cache, q));
    auto fs = factor_zpoly(to_zpoly(charpoly(TB)));
    if (fs.size() != 1) throw std::logic_error("block is not isotypic");
    if (fs[0].first.deg() == deg) {
      A = std::move(TB);
      h = fs[0].first;
      found = true;
      break;
    }
  }
  for (size_t i = 0; i < qs.size() && !found; i++)
    for (size_t j = i + 1; j < qs.size() && !found; j++)
      for (long cc = 1; cc <= 3 && !found; cc++) {
        Mat<Rat> TB = restrict_to_rows(B, hecke_cusp(sp, cache, qs[i])) +
                      restrict_to_rows(B, hecke_cusp(sp, cache, qs[j])) * Rat(cc);
        auto fs = factor_zpoly(to_zpoly(charpoly(TB)));
        if (fs.size() == 1 && fs[0].first.deg() == deg) {
          A = std::move(TB);
          h = fs[0].first;
          found = true;
        }
      }
  if (!found || deg > 8) {
    Mat<Rat> TB = restrict_to_rows(B, hecke_cusp(sp, cache, qs.empty() ? 2 : qs[0]));
    auto fs = factor_zpoly(to_zpoly(charpoly(TB)));
    rec.field_poly = fs[0].first;
    rec.warnings.push_back(deg > 8 ? "coefficient field degree above 8; characteristic polynomials only"
                                   : "no generator found for the coefficient field");
    return;
  }

  // roots are algebraic integers, so the primitive factor is monic up to sign
  if (h.lc() == -1) h = -h;
  if (h.lc() != 1) throw std::logic_error("eigenvalue polynomial is not monic");
  rec.field_poly = h;

  std::vector<NFElem> xb;  // eigenvector in block coordinates
  if (deg == 1) {
    Rat theta = -Rat(h.c[0]);
    Mat<Rat> M = A - identity_mat<Rat>(A.nr) * theta;
    Mat<Rat> Kn = kernel(M);
    if (Kn.nr != 2) throw std::logic_error("eigenspace of unexpected dimension");
    for (auto& v : Kn.row(0)) xb.emplace_back(v);
  } else {
    rec.K = NumberField::get(h);
    NFElem theta = rec.K->theta();
    Mat<NFElem> M = promote(A);
    for (long i = 0; i < M.nr; i++) M.at(i, i) = M.at(i, i) - theta;
    Mat<NFElem> Kn = kernel(M);
    if (Kn.nr != 2) throw std::logic_error("eigenspace of unexpected dimension");
    xb = Kn.row(0);
  }

  // eigenvector in cuspidal coordinates
  rec.eigvec.assign(B.nc, NFElem(Rat(0)));
  for (long i = 0; i < B.nr; i++)
    for (long j = 0; j < B.nc; j++) rec.eigvec[j] += xb[i] * NFElem(B.at(i, j));

  long piv = -1;
  for (long i = 0; i < (long)xb.size(); i++)
    if (!(xb[i] == NFElem(Rat(0)))) {
      piv = i;
      break;
    }

  // the prime divisors of the level are always included: the local type at a
  // bad prime is read off a_p there, whatever the requested bound
  std::vector<long> ps = primes_up_to(bound);
  for (auto& [q, e] : factor(sp.N))
    if (q > bound) ps.push_back(q.get_si());
  std::sort(ps.begin(), ps.end());
  for (long p : ps) {
    Mat<NFElem> TB = promote(restrict_to_rows(B, hecke_cusp(sp, cache, p)));
    auto v = TB.apply(xb);
    NFElem a = v[piv] / xb[piv];
    for (long i = 0; i < (long)xb.size(); i++)
      if (!(v[i] == a * xb[i])) throw std::logic_error("eigenvector failure at p = " + std::to_string(p));
    rec.ap.emplace_back(Int(p), a);
  }
}

bool rec_less(const NewformRecord& x, const NewformRecord& y) {
  if (x.is_new != y.is_new) return x.is_new && !y.is_new;
  if (x.level != y.level) return x.level < y.level;
  if (x.field_poly.deg() != y.field_poly.deg()) return x.field_poly.deg() < y.field_poly.deg();
  for (size_t i = 0; i < std::min(x.ap.size(), y.ap.size()); i++) {
    const auto &xa = x.ap[i].second.c, &ya = y.ap[i].second.c;
    if (xa != ya) return xa < ya;
  }
  return x.field_poly.c < y.field_poly.c;
}

using Memo = std::map<std::string, std::vector<NewformRecord>>;

std::vector<NewformRecord> decomp_impl(const QSpace& sp, long bound, Memo& memo) {
  std::string key = sp.N.get_str() + "|" + std::to_string(sp.k) + "|" + sp.chi.label();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::vector<NewformRecord> out;
  if (sp.cuspidal.nr == 0) {
    memo[key] = out;
    return out;
  }
  std::map<long, Mat<Rat>> cache;
  auto blocks = split_blocks(sp, cache);
  long sb = sturm_bound(sp.N, sp.k);

  // transfer spans of the new orbits at proper divisor levels
  struct OldCandidate {
    NewformRecord rec;
    Mat<Rat> span;
  };
  std::vector<OldCandidate> oldc;
  for (const Int& M : divisors(sp.N)) {
    if (M == sp.N || mod(M, sp.chi.conductor()) != 0) continue;
    DirichletChar chiM = extend_char(sp.chi, M);
    QSpace spM(M, sp.k, chiM);
    if (spM.cuspidal.nr == 0) continue;
    for (auto& r : decomp_impl(spM, bound, memo)) {
      if (!r.is_new) continue;
      oldc.push_back({r, old_span_of(spM, r.block, sp)});
    }
  }

  for (auto& B : blocks) {
    const OldCandidate* hit = nullptr;
    for (auto& cand : oldc)
      if (subspace_of(B, cand.span)) {
        if (hit) throw std::logic_error("block matched two divisor orbits");
        hit = &cand;
      }
    if (hit) {
      NewformRecord r2 = hit->rec;
      r2.is_new = false;
      r2.ambient_level = sp.N;
      r2.block = B;
      r2.eigvec.clear();
      r2.sturm = sb;
      out.push_back(std::move(r2));
    } else {
      NewformRecord rec;
      rec.level = sp.N;
      rec.ambient_level = sp.N;
      rec.weight = sp.k;
      rec.character = sp.chi.label();
      rec.sturm = sb;
      rec.block = B;
      if (bound < sb) rec.warnings.push_back("coefficient bound below the Sturm bound");
      extract_eigendata(sp, cache, rec, bound);
      if (!rec.ap.empty())
        for (auto& [p, e] : factor(sp.N)) rec.local_types.push_back(classify_local(rec, p));
      out.push_back(std::move(rec));
    }
  }
  std::sort(out.begin(), out.end(), rec_less);
  memo[key] = out;
  return out;
}

}  // namespace

std::vector<NewformRecord> newform_decomposition(const QSpace& sp, long bound) {
  Memo memo;
  return decomp_impl(sp, bound, memo);
}

std::vector<NFElem> an_from_ap(const NewformRecord& f, long n) {
  std::vector<NFElem> a(n + 1, NFElem(Rat(0)));
  if (n < 1) return a;
  a[1] = NFElem(Rat(1));
  DirichletChar chi = DirichletChar::from_label(f.character);
  for (long p : primes_up_to(n)) {
    NFElem ap = f.eigenvalue(Int(p));
    NFElem cp(chi.value_rat(Int(p)) * Rat(pow(Int(p), (unsigned long)(f.weight - 1))));
    NFElem prev2(Rat(1)), prev1 = ap;
    for (Int q = p; q <= n; q *= p) {
      a[(long)q.get_si()] = prev1;
      NFElem nxt = ap * prev1 - cp * prev2;
      prev2 = prev1;
      prev1 = nxt;
    }
  }
  // multiplicative fill by smallest prime factor
  for (long v = 2; v <= n; v++) {
    long p = 0;
    for (long q : primes_up_to(v))
      if (v % q == 0) {
        p = q;
        break;
      }
    long pw = 1;
    long rest = v;
    while (rest % p == 0) {
      pw *= p;
      rest /= p;
    }
    if (rest > 1) a[v] = a[pw] * a[rest];
  }
  return a;
}

LocalTypeInfo classify_local(const NewformRecord& f, const Int& p) {
  LocalTypeInfo lt;
  lt.p = p;
  if (mod(f.level, p) != 0) {
    lt.delta = 2;
    lt.cls = "good";
    return lt;
  }
  DirichletChar chi = DirichletChar::from_label(f.character);
  long vC = valuation(chi.conductor(), p);
  long vN = valuation(f.level, p);

  NFElem psi0(Rat(1));  // prime-to-p part of the character, evaluated at p
  Int pv = pow(p, (unsigned long)valuation(chi.modulus(), p));
  Int Q = chi.modulus() / pv;
  if (Q > 1) {
    Int arg = (pv == 1) ? mod(p, Q) : crt(mod(p, Q), Q, Int(1), pv);
    psi0 = NFElem(chi.value_rat(arg));
  }

  NFElem ap = f.eigenvalue(p);
  bool special = ap * ap == psi0 * NFElem(Rat(pow(p, (unsigned long)(f.weight - 2))));
  bool ps = vN == vC;
  if (special && ps)
    throw std::domain_error("local type at " + p.get_str() + ": tests conflict, data corrupt");
  if (special) {
    lt.delta = 1;
    lt.cls = "special";
  } else if (ps) {
    lt.delta = 1;
    lt.cls = "principal series";
  } else {
    lt.delta = 0;
    lt.cls = "supercuspidal";
  }
  return lt;
}

Rat fricke_sign(const QSpace& sp, const NewformRecord& f) {
  if (!f.is_new || sp.N != f.level || sp.k != f.weight)
    throw std::domain_error("fricke_sign: record does not belong to this space");
  if ((sp.k - 2) % 2) throw std::domain_error("fricke_sign: odd weight");
  Mat<Rat> Wc = restrict_to_rows(sp.cuspidal, sp.atkin_lehner());
  Mat<Rat> WB = restrict_to_rows(f.block, Wc);
  Rat s = WB.at(0, 0);
  Mat<Rat> D = WB - identity_mat<Rat>(WB.nr) * s;
  if (!D.is_zero()) throw std::domain_error("fricke_sign: not scalar on the orbit");
  Rat root(pow(sp.N, (unsigned long)((sp.k - 2) / 2)));
  Rat w = s / root;
  if (w * w != 1) throw std::logic_error("fricke_sign: not a sign");
  return w;
}

}  // namespace msadj
