#include "core/ball.hpp"

namespace msadj {

static void rad_add(mpfr_t r, const mpfr_t a) { mpfr_add(r, r, a, MPFR_RNDU); }

void RBall::add_ulp_error() {
  if (mpfr_zero_p(m)) return;
  mpfr_t u;
  mpfr_init2(u, 32);
  mpfr_set_ui_2exp(u, 1, mpfr_get_exp(m) - prec() + 1, MPFR_RNDU);
  rad_add(r, u);
  mpfr_clear(u);
}

bool RBall::contains_zero() const {
  mpfr_t am;
  mpfr_init2(am, 32);
  mpfr_abs(am, m, MPFR_RNDD);
  bool z = mpfr_cmp(am, r) <= 0;
  mpfr_clear(am);
  return z;
}

double RBall::abs_upper_d() const {
  mpfr_t am;
  mpfr_init2(am, 64);
  mpfr_abs(am, m, MPFR_RNDU);
  mpfr_add(am, am, r, MPFR_RNDU);
  double v = mpfr_get_d(am, MPFR_RNDU);
  mpfr_clear(am);
  return v;
}

RBall RBall::exact(const Rat& q, mpfr_prec_t prec) {
  RBall x(prec);
  int inex = mpfr_set_q(x.m, q.get_mpq_t(), MPFR_RNDN);
  if (inex != 0) x.add_ulp_error();
  return x;
}

RBall RBall::exact_int(long v, mpfr_prec_t prec) {
  RBall x(prec);
  mpfr_set_si(x.m, v, MPFR_RNDN);
  return x;
}

RBall RBall::pi(mpfr_prec_t prec) {
  RBall x(prec);
  mpfr_const_pi(x.m, MPFR_RNDN);
  x.add_ulp_error();
  return x;
}

std::string RBall::mid_str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits, m);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string RBall::rad_str() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.2Re", r);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

RBall RBall::operator+(const RBall& o) const {
  RBall x(std::max(prec(), o.prec()));
  mpfr_add(x.m, m, o.m, MPFR_RNDN);
  mpfr_add(x.r, r, o.r, MPFR_RNDU);
  x.add_ulp_error();
  return x;
}

RBall RBall::operator-(const RBall& o) const {
  RBall x(std::max(prec(), o.prec()));
  mpfr_sub(x.m, m, o.m, MPFR_RNDN);
  mpfr_add(x.r, r, o.r, MPFR_RNDU);
  x.add_ulp_error();
  return x;
}

RBall RBall::operator-() const {
  RBall x = *this;
  mpfr_neg(x.m, x.m, MPFR_RNDN);
  return x;
}

RBall RBall::abs() const {
  RBall x = *this;
  mpfr_abs(x.m, x.m, MPFR_RNDN);
  return x;
}

RBall RBall::operator*(const RBall& o) const {
  RBall x(std::max(prec(), o.prec()));
  mpfr_mul(x.m, m, o.m, MPFR_RNDN);
  // r' = |m1| r2 + |m2| r1 + r1 r2
  mpfr_t t, am;
  mpfr_init2(t, 32);
  mpfr_init2(am, 32);
  mpfr_abs(am, m, MPFR_RNDU);
  mpfr_mul(t, am, o.r, MPFR_RNDU);
  rad_add(x.r, t);
  mpfr_abs(am, o.m, MPFR_RNDU);
  mpfr_mul(t, am, r, MPFR_RNDU);
  rad_add(x.r, t);
  mpfr_mul(t, r, o.r, MPFR_RNDU);
  rad_add(x.r, t);
  mpfr_clear(t);
  mpfr_clear(am);
  x.add_ulp_error();
  return x;
}

RBall RBall::operator/(const RBall& o) const {
  if (o.contains_zero()) throw precision_error("ball division by interval containing 0");
  RBall x(std::max(prec(), o.prec()));
  mpfr_div(x.m, m, o.m, MPFR_RNDN);
  // r' = (r1 + |m1/m2| r2) / (|m2| - r2)
  mpfr_t t, am, den;
  mpfr_init2(t, 64);
  mpfr_init2(am, 64);
  mpfr_init2(den, 64);
  mpfr_abs(den, o.m, MPFR_RNDD);
  mpfr_sub(den, den, o.r, MPFR_RNDD);
  mpfr_div(am, m, o.m, MPFR_RNDU);
  mpfr_abs(am, am, MPFR_RNDU);
  mpfr_mul(t, am, o.r, MPFR_RNDU);
  mpfr_add(t, t, r, MPFR_RNDU);
  mpfr_div(t, t, den, MPFR_RNDU);
  rad_add(x.r, t);
  mpfr_clear(t);
  mpfr_clear(am);
  mpfr_clear(den);
  x.add_ulp_error();
  return x;
}

// first-order propagation: out_rad += |dbound| * in_rad * 1.0625
static void prop_deriv(RBall& out, const RBall& in, const mpfr_t dbound) {
  if (mpfr_zero_p(in.r)) return;
  mpfr_t t;
  mpfr_init2(t, 32);
  mpfr_abs(t, dbound, MPFR_RNDU);
  mpfr_mul(t, t, in.r, MPFR_RNDU);
  mpfr_mul_d(t, t, 1.0625, MPFR_RNDU);
  rad_add(out.r, t);
  mpfr_clear(t);
}

// guard: relative radius must be tiny for first-order propagation to be honest
static void guard_small(const RBall& x) {
  if (mpfr_zero_p(x.r)) return;
  mpfr_t t;
  mpfr_init2(t, 32);
  mpfr_abs(t, x.m, MPFR_RNDU);
  mpfr_add_ui(t, t, 1, MPFR_RNDU);
  mpfr_mul_2si(t, t, -24, MPFR_RNDU);
  bool ok = mpfr_cmp(x.r, t) <= 0;
  mpfr_clear(t);
  if (!ok) throw precision_error("ball radius too large for transcendental kernel");
}

RBall sqrt(const RBall& x) {
  guard_small(x);
  RBall y(x.prec());
  mpfr_sqrt(y.m, x.m, MPFR_RNDN);
  mpfr_t d;
  mpfr_init2(d, 32);
  mpfr_set_d(d, 0.5, MPFR_RNDU);
  mpfr_div(d, d, y.m, MPFR_RNDU);  // 1/(2 sqrt x)
  prop_deriv(y, x, d);
  mpfr_clear(d);
  y.add_ulp_error();
  return y;
}

RBall exp(const RBall& x) {
  guard_small(x);
  RBall y(x.prec());
  mpfr_exp(y.m, x.m, MPFR_RNDN);
  prop_deriv(y, x, y.m);  // |exp'| = exp
  y.add_ulp_error();
  return y;
}

RBall log(const RBall& x) {
  if (mpfr_sgn(x.m) <= 0) throw domain_error("ball log: nonpositive");
  guard_small(x);
  RBall y(x.prec());
  mpfr_log(y.m, x.m, MPFR_RNDN);
  mpfr_t d;
  mpfr_init2(d, 32);
  mpfr_ui_div(d, 1, x.m, MPFR_RNDU);
  prop_deriv(y, x, d);
  mpfr_clear(d);
  y.add_ulp_error();
  return y;
}

RBall sin(const RBall& x) {
  RBall y(x.prec());
  mpfr_sin(y.m, x.m, MPFR_RNDN);
  mpfr_t one;
  mpfr_init2(one, 32);
  mpfr_set_ui(one, 1, MPFR_RNDU);
  prop_deriv(y, x, one);  // |sin'| <= 1
  mpfr_clear(one);
  y.add_ulp_error();
  return y;
}

RBall cos(const RBall& x) {
  RBall y(x.prec());
  mpfr_cos(y.m, x.m, MPFR_RNDN);
  mpfr_t one;
  mpfr_init2(one, 32);
  mpfr_set_ui(one, 1, MPFR_RNDU);
  prop_deriv(y, x, one);
  mpfr_clear(one);
  y.add_ulp_error();
  return y;
}

RBall gamma(const RBall& x) {
  if (mpfr_sgn(x.m) <= 0) throw domain_error("ball gamma: need positive argument");
  guard_small(x);
  RBall y(x.prec());
  mpfr_gamma(y.m, x.m, MPFR_RNDN);
  if (!mpfr_zero_p(x.r)) {
    // |gamma'| = |gamma * psi|
    mpfr_t d, ps;
    mpfr_init2(d, 64);
    mpfr_init2(ps, 64);
    mpfr_digamma(ps, x.m, MPFR_RNDA);
    mpfr_abs(ps, ps, MPFR_RNDU);
    mpfr_add_ui(ps, ps, 1, MPFR_RNDU);  // slack for psi variation over the ball
    mpfr_mul(d, y.m, ps, MPFR_RNDU);
    prop_deriv(y, x, d);
    mpfr_clear(d);
    mpfr_clear(ps);
  }
  y.add_ulp_error();
  return y;
}

RBall digamma(const RBall& x) {
  if (!mpfr_zero_p(x.r)) throw precision_error("digamma: exact input required");
  RBall y(x.prec());
  mpfr_digamma(y.m, x.m, MPFR_RNDN);
  y.add_ulp_error();
  return y;
}

RBall gamma_inc(const RBall& a, const RBall& x) {
  if (!mpfr_zero_p(a.r)) throw precision_error("gamma_inc: exact first argument required");
  if (mpfr_sgn(x.m) <= 0) throw domain_error("gamma_inc: need x > 0");
  guard_small(x);
  RBall y(std::max(a.prec(), x.prec()));
  mpfr_gamma_inc(y.m, a.m, x.m, MPFR_RNDN);
  if (!mpfr_zero_p(x.r)) {
    // |d/dx Gamma(a,x)| = x^(a-1) e^(-x)
    mpfr_t d, t;
    mpfr_init2(d, 64);
    mpfr_init2(t, 64);
    mpfr_sub_ui(t, a.m, 1, MPFR_RNDN);
    mpfr_pow(d, x.m, t, MPFR_RNDU);
    mpfr_neg(t, x.m, MPFR_RNDN);
    mpfr_exp(t, t, MPFR_RNDU);
    mpfr_mul(d, d, t, MPFR_RNDU);
    prop_deriv(y, x, d);
    mpfr_clear(d);
    mpfr_clear(t);
  }
  y.add_ulp_error();
  return y;
}

RBall pow_rat(const RBall& x, const Rat& e) {
  if (e == 0) return RBall::exact_int(1, x.prec());
  if (mpfr_sgn(x.m) <= 0) throw domain_error("pow_rat: need x > 0");
  // x^e = exp(e log x)
  RBall lx = log(x);
  RBall eb = RBall::exact(e, x.prec());
  return exp(lx * eb);
}

RBall pow_int(const RBall& x, long e) {
  if (e == 0) return RBall::exact_int(1, x.prec());
  bool neg = e < 0;
  unsigned long ae = neg ? -e : e;
  RBall acc = RBall::exact_int(1, x.prec());
  RBall base = x;
  while (ae) {
    if (ae & 1) acc = acc * base;
    base = base * base;
    ae >>= 1;
  }
  if (neg) return RBall::exact_int(1, x.prec()) / acc;
  return acc;
}

RBall mul_2exp(const RBall& x, long e) {
  RBall y = x;
  mpfr_mul_2si(y.m, y.m, e, MPFR_RNDN);
  mpfr_mul_2si(y.r, y.r, e, MPFR_RNDU);
  return y;
}

CBall cis_2pi(const Rat& t, mpfr_prec_t prec) {
  // reduce t mod 1 exactly
  Rat u = t - Rat(Int(t.get_num() / t.get_den()));  // toward zero; fix below
  if (u < 0) u += 1;
  RBall two_pi_t = RBall::pi(prec) * RBall::exact(2 * u, prec);
  return CBall(cos(two_pi_t), sin(two_pi_t));
}

}  // namespace msadj
