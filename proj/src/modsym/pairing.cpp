#include "modsym/pairing.hpp"

#include <cassert>

namespace msadj {

namespace {

const M22 Smat(0, -1, 1, 0);
const M22 Tmat(1, 1, 0, 1);

int mod3l(const Int& v) {
  long r = Int(v % 3).get_si();
  return (int)((r + 3) % 3);
}

std::array<int, 4> mat_mod3(const M22& g) {
  return {mod3l(g.a), mod3l(g.b), mod3l(g.c), mod3l(g.d)};
}

long code3(const std::array<int, 4>& A) {
  return ((A[0] * 3 + A[1]) * 3 + A[2]) * 3 + A[3];
}

M22 neg(const M22& g) { return M22(-g.a, -g.b, -g.c, -g.d); }

// CRT for possibly non-coprime moduli; empty when the congruences clash.
std::optional<Int> crt2(const Int& a, const Int& m, const Int& b, const Int& n) {
  Int s, t;
  Int g = gcdext(m, n, s, t);
  if ((b - a) % g != 0) return std::nullopt;
  Int L = m / g * n;
  Int x = (a + m * (((b - a) / g * s) % (n / g))) % L;
  if (x < 0) x += L;
  return x;
}

std::vector<Rat> neg_poly(std::vector<Rat> P) {
  for (auto& c : P) c = -c;
  return P;
}

void acc_poly(std::vector<Rat>& dst, const std::vector<Rat>& src, const Rat& w) {
  if (dst.empty()) dst.assign(src.size(), Rat(0));
  for (size_t i = 0; i < src.size(); ++i) dst[i] += w * src[i];
}

bool is_zero_poly(const std::vector<Rat>& P) {
  for (auto& c : P)
    if (c != 0) return false;
  return true;
}

}  // namespace

Rat sym_power_pairing(const std::vector<Rat>& P, const std::vector<Rat>& Q) {
  long m = (long)P.size() - 1;
  assert((long)Q.size() == m + 1);
  Rat out(0);
  Rat fac;  // (-1)^i i! (m-i)!
  for (long i = 0; i <= m; ++i) {
    if (i == 0) {
      Int f(1);
      for (long j = 2; j <= m; ++j) f *= j;
      fac = Rat(f);
    } else {
      // step: (-1) * i / (m - i + 1)
      fac = -fac * Rat(i) / Rat(m - i + 1);
    }
    out += fac * P[i] * Q[m - i];
  }
  return out;
}

long CoverPairing::key_of(const M22& h) const {
  long p = sp_->p1.index(h.c, h.d);
  return code3(mat_mod3(h)) * np_ + p;
}

std::optional<M22> CoverPairing::lift_from_key(const std::array<int, 4>& A,
                                               long p1idx) const {
  auto [c0, d0] = sp_->p1.reps[p1idx];
  Int L = (N_ % 3 == 0) ? N_ : 3 * N_;
  for (int u = 1; u <= 2; ++u) {
    auto oc = crt2(Int(A[2]), Int(3), Int(u * c0) % N_, N_);
    auto od = crt2(Int(A[3]), Int(3), Int(u * d0) % N_, N_);
    if (!oc || !od) continue;
    Int C = *oc, D = *od;
    if (C == 0) C = L;
    while (gcd(C, D) != 1) D += L;
    Int s, t;
    gcdext(D, C, s, t);  // s D + t C = 1
    Int a0 = s, b0 = -t;
    // top row family (a0 + xC, b0 + xD); fix it mod 3
    long x = -1;
    if (A[2] != 0) {
      for (long xx = 0; xx < 3 && x < 0; ++xx)
        if (mod3l(a0 + xx * C) == A[0]) x = xx;
    } else {
      for (long xx = 0; xx < 3 && x < 0; ++xx)
        if (mod3l(b0 + xx * D) == A[1]) x = xx;
    }
    assert(x >= 0);
    M22 g(a0 + x * C, b0 + x * D, C, D);
    assert(g.det() == 1);
    assert(mat_mod3(g) == A);
    assert(sp_->p1.index(g.c, g.d) == p1idx);
    return g;
  }
  return std::nullopt;
}

CoverPairing::CoverPairing(const QSpace& sp) : sp_(&sp), m_(sp.m), N_(sp.N) {
  if (m_ % 2 != 0) throw domain_error("pairing: weight must be even");
  if (sp.collapsed) throw domain_error("pairing: space is zero");
  np_ = sp.p1.size();

  // the 24 elements of SL2(Z/3)
  std::vector<std::array<int, 4>> sl23;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) sl23.push_back({a, b, c, d});
  assert(sl23.size() == 24);

  // cosets of the cover group: (matrix mod 3, bottom row class mod N)
  key2coset_.assign(81 * np_, -1);
  for (auto& A : sl23)
    for (long x = 0; x < np_; ++x) {
      auto g = lift_from_key(A, x);
      if (!g) continue;
      key2coset_[code3(A) * np_ + x] = (long)lifts_.size();
      lifts_.push_back(*g);
    }

  // undirected edge slots: a geometric edge carries four cosets
  // (sign flip and direction reversal); lowest id is the canonical chart
  long nc = ncoset();
  slot_.assign(nc, -1);
  samedir_.assign(nc, true);
  for (long i = 0; i < nc; ++i) {
    if (slot_[i] >= 0) continue;
    const M22& g = lifts_[i];
    long in = key2coset_[key_of(neg(g))];
    long ir = key2coset_[key_of(g * Smat)];
    long inr = key2coset_[key_of(neg(g) * Smat)];
    assert(in >= 0 && ir >= 0 && inr >= 0);
    long canon = std::min(std::min(i, in), std::min(ir, inr));
    long sl = (long)slot_canon_.size();
    slot_canon_.push_back(canon);
    bool canon_rev = (canon == ir || canon == inr);
    for (long j : {i, in}) { slot_[j] = sl; samedir_[j] = !canon_rev; }
    for (long j : {ir, inr}) { slot_[j] = sl; samedir_[j] = canon_rev; }
  }

  // cusp fans: orbits under right multiplication by T
  fan_pos_.assign(nc, {-1, -1});
  for (long s = 0; s < nc; ++s) {
    if (fan_pos_[s].first >= 0) continue;
    Fan f;
    f.x0 = lifts_[s];
    M22 cur = f.x0;
    long id = s;
    do {
      fan_pos_[id] = {(long)fans_.size(), (long)f.cosets.size()};
      f.cosets.push_back(id);
      cur = cur * Tmat;
      id = key2coset_[key_of(cur)];
      assert(id >= 0);
    } while (id != s);
    long w = (long)f.cosets.size();
    M22 piv = f.x0 * M22(1, w, 0, 1) * f.x0.adj();
    assert(mat_mod3(piv) == (std::array<int, 4>{1, 0, 0, 1}));
    assert(piv.c % N_ == 0 && piv.det() == 1);
    f.hol = Mat<Rat>(m_ + 1, m_ + 1);
    for (long j = 0; j <= m_; ++j) {
      std::vector<Rat> e(m_ + 1, Rat(0));
      e[j] = Rat(1);
      auto col = rho_poly(piv, e);
      for (long i = 0; i <= m_; ++i) f.hol.at(i, j) = col[i] - Rat(i == j ? 1 : 0);
    }
    fans_.push_back(std::move(f));
  }

  // transfer sum: representatives of the cover group inside the level group,
  // one per matrix mod 3 that the level group can reach
  long triv = sp_->p1.index(Int(0), Int(1));
  for (auto& A : sl23) {
    auto g = lift_from_key(A, triv);
    if (!g) continue;
    assert(g->c % N_ == 0);
    gammahats_.push_back(*g);
  }
  assert(gammahats_.size() == 24 || gammahats_.size() == 6);

  // normalization: divide by the covering degree so levels compare, and by 8
  // for the sign/direction double counts of the transfer (each geometric edge
  // is hit by both signed lifts, on both chain factors, and every cusp by its
  // two signed fans).  With this, the level-11 weight-2 cuspidal lattice Gram
  // is exactly unimodular.
  long deg = (long)gammahats_.size() / 2;
  eps0_ = Rat(1) / Rat(8 * deg);

  basis_chains_.resize(sp.dim);
  for (long j = 0; j < sp.dim; ++j) {
    long gen = sp.basis_gens[j];
    long cls = gen / (m_ + 1), i = gen % (m_ + 1);
    std::vector<Rat> Q(m_ + 1, Rat(0));
    Q[i] = Rat(1);
    basis_chains_[j] = chain_of_symbol(sp.p1.lifts[cls], Q);
  }

  fricke_ = sp.atkin_lehner();
}

void CoverPairing::add_contribution(Chain& c, const M22& h,
                                    const std::vector<Rat>& C) const {
  long kid = key2coset_[key_of(h)];
  assert(kid >= 0);
  long sl = slot_[kid];
  bool sd = samedir_[kid];
  const M22& target = lifts_[slot_canon_[sl]];
  M22 hh = sd ? h : h * Smat;
  M22 gam = hh * target.adj();
  if (mod3l(gam.a) != 1) gam = neg(gam);
  assert(mat_mod3(gam) == (std::array<int, 4>{1, 0, 0, 1}));
  assert(gam.c % N_ == 0 && gam.det() == 1);
  auto add = rho_poly(gam.adj(), C);
  acc_poly(c[sl], add, Rat(sd ? 1 : -1));
  if (is_zero_poly(c[sl])) c.erase(sl);
}

std::vector<Rat> CoverPairing::coeff_at(const Chain& c, const M22& h,
                                        long coset_id) const {
  long sl = slot_[coset_id];
  auto it = c.find(sl);
  if (it == c.end()) return std::vector<Rat>(m_ + 1, Rat(0));
  bool sd = samedir_[coset_id];
  const M22& target = lifts_[slot_canon_[sl]];
  M22 hh = sd ? h : h * Smat;
  M22 gam = hh * target.adj();
  if (mod3l(gam.a) != 1) gam = neg(gam);
  assert(mat_mod3(gam) == (std::array<int, 4>{1, 0, 0, 1}));
  assert(gam.c % N_ == 0 && gam.det() == 1);
  auto out = rho_poly(gam, it->second);
  if (!sd) out = neg_poly(out);
  return out;
}

CoverPairing::Chain CoverPairing::chain_of_symbol(const M22& g,
                                                  const std::vector<Rat>& Q) const {
  Chain c;
  for (const auto& gh : gammahats_) {
    Rat w = sp_->chi_val(gh.d);  // order <= 2, so conjugation is the identity
    if (w == 0) continue;
    M22 h = gh * g;
    auto C = rho_poly(h, Q);
    for (auto& x : C) x *= w;
    add_contribution(c, h, C);
  }
  return c;
}

CoverPairing::Chain CoverPairing::chain_of(const std::vector<Rat>& x) const {
  Chain c;
  for (long j = 0; j < sp_->dim; ++j) {
    if (x[j] == 0) continue;
    for (const auto& [sl, P] : basis_chains_[j]) acc_poly(c[sl], P, x[j]);
  }
  for (auto it = c.begin(); it != c.end();)
    it = is_zero_poly(it->second) ? c.erase(it) : std::next(it);
  return c;
}

Rat CoverPairing::pair_chains(const Chain& cx, const Chain& cy) const {
  Rat total(0);
  for (const auto& f : fans_) {
    bool hasx = false, hasy = false;
    for (long id : f.cosets) {
      hasx = hasx || cx.count(slot_[id]);
      hasy = hasy || cy.count(slot_[id]);
      if (hasx && hasy) break;
    }
    if (!hasx || !hasy) continue;
    long w = (long)f.cosets.size();
    std::vector<std::vector<Rat>> as(w), bs(w);
    M22 h = f.x0;
    std::vector<Rat> D(m_ + 1, Rat(0));
    for (long j = 0; j < w; ++j) {
      as[j] = coeff_at(cx, h, f.cosets[j]);
      bs[j] = coeff_at(cy, h, f.cosets[j]);
      for (long i = 0; i <= m_; ++i) D[i] += as[j][i];
      h = h * Tmat;
    }
    // winding level before the first edge: full turn is the holonomy
    std::vector<Rat> C;
    if (!solve(f.hol, D, C))
      throw domain_error("pairing: class is not cuspidal");
    // crossings: flow through each edge times the mid-edge winding level
    std::vector<Rat> Gprev = C, Gcur(m_ + 1);
    for (long j = 0; j < w; ++j) {
      if (is_zero_poly(bs[j])) {
        for (long i = 0; i <= m_; ++i) Gprev[i] += as[j][i];
        continue;
      }
      for (long i = 0; i <= m_; ++i) Gcur[i] = Gprev[i] + as[j][i];
      std::vector<Rat> mid(m_ + 1);
      for (long i = 0; i <= m_; ++i) mid[i] = (Gprev[i] + Gcur[i]) / Rat(2);
      total += sym_power_pairing(mid, bs[j]);
      Gprev = Gcur;
    }
  }
  return eps0_ * total;
}

Rat CoverPairing::pair_raw(const std::vector<Rat>& x,
                           const std::vector<Rat>& y) const {
  return pair_chains(chain_of(x), chain_of(y));
}

Mat<Rat> CoverPairing::gram_raw(const Mat<Rat>& rows) const {
  std::vector<Chain> ch(rows.nr);
  for (long i = 0; i < rows.nr; ++i) ch[i] = chain_of(rows.row(i));
  Mat<Rat> G(rows.nr, rows.nr);
  for (long i = 0; i < rows.nr; ++i)
    for (long j = 0; j < rows.nr; ++j) G.at(i, j) = pair_chains(ch[i], ch[j]);
  return G;
}

Mat<Rat> CoverPairing::gram_twisted(const Mat<Rat>& rows) const {
  std::vector<Chain> ch(rows.nr), chw(rows.nr);
  for (long i = 0; i < rows.nr; ++i) {
    ch[i] = chain_of(rows.row(i));
    chw[i] = chain_of(fricke_.apply(rows.row(i)));
  }
  Mat<Rat> G(rows.nr, rows.nr);
  for (long i = 0; i < rows.nr; ++i)
    for (long j = 0; j < rows.nr; ++j) G.at(i, j) = pair_chains(chw[i], ch[j]);
  return G;
}

}  // namespace msadj
