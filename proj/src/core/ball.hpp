#pragma once
// Midpoint-radius real/complex arithmetic on MPFR. Radii are tracked with
// outward rounding; transcendental kernels use first-order derivative bounds
// with a safety factor (inputs at those call sites carry tiny relative radii,
// enforced by guards that throw precision_error when violated).

#include <mpfr.h>

#include <string>

#include "core/arith.hpp"

namespace msadj {

class RBall {
 public:
  mpfr_t m;
  mpfr_t r;  // nonnegative, low precision, rounded up

  explicit RBall(mpfr_prec_t prec = 128) {
    mpfr_init2(m, prec);
    mpfr_init2(r, 32);
    mpfr_set_zero(m, 1);
    mpfr_set_zero(r, 1);
  }
  RBall(const RBall& o) {
    mpfr_init2(m, mpfr_get_prec(o.m));
    mpfr_init2(r, 32);
    mpfr_set(m, o.m, MPFR_RNDN);
    mpfr_set(r, o.r, MPFR_RNDU);
  }
  RBall(RBall&& o) noexcept {
    mpfr_init2(m, 2);
    mpfr_init2(r, 2);
    mpfr_swap(m, o.m);
    mpfr_swap(r, o.r);
  }
  RBall& operator=(RBall o) {
    mpfr_swap(m, o.m);
    mpfr_swap(r, o.r);
    return *this;
  }
  ~RBall() {
    mpfr_clear(m);
    mpfr_clear(r);
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(m); }

  static RBall exact(const Rat& q, mpfr_prec_t prec);
  static RBall exact_int(long v, mpfr_prec_t prec);
  static RBall pi(mpfr_prec_t prec);

  void add_ulp_error();  // inflate radius by 1 ulp of the midpoint
  bool contains_zero() const;
  bool is_exact_zero() const { return mpfr_zero_p(m) && mpfr_zero_p(r); }
  double mid_d() const { return mpfr_get_d(m, MPFR_RNDN); }
  double rad_d() const { return mpfr_get_d(r, MPFR_RNDU); }
  // |x| <= bound (upper bound of the ball in absolute value)
  double abs_upper_d() const;

  std::string mid_str(int digits) const;
  std::string rad_str() const;

  RBall operator+(const RBall& o) const;
  RBall operator-(const RBall& o) const;
  RBall operator*(const RBall& o) const;
  RBall operator/(const RBall& o) const;
  RBall operator-() const;
  RBall abs() const;
};

RBall sqrt(const RBall& x);
RBall exp(const RBall& x);
RBall log(const RBall& x);
RBall sin(const RBall& x);
RBall cos(const RBall& x);
RBall gamma(const RBall& x);          // x > 0
RBall digamma(const RBall& x);        // requires exact input (radius 0), non-pole
RBall gamma_inc(const RBall& a, const RBall& x);  // upper incomplete, a exact, x > 0
RBall pow_rat(const RBall& x, const Rat& e);      // x > 0
RBall pow_int(const RBall& x, long e);
RBall mul_2exp(const RBall& x, long e);

struct CBall {
  RBall re, im;
  CBall() = default;
  CBall(RBall r, RBall i) : re(std::move(r)), im(std::move(i)) {}
  static CBall exact(const Rat& x, const Rat& y, mpfr_prec_t prec) {
    return CBall(RBall::exact(x, prec), RBall::exact(y, prec));
  }
  CBall operator+(const CBall& o) const { return {re + o.re, im + o.im}; }
  CBall operator-(const CBall& o) const { return {re - o.re, im - o.im}; }
  CBall operator*(const CBall& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CBall operator*(const RBall& s) const { return {re * s, im * s}; }
  CBall conj() const { return {re, -im}; }
  RBall norm2() const { return re * re + im * im; }
};

// e^{2 pi i t} for exact rational t.
CBall cis_2pi(const Rat& t, mpfr_prec_t prec);

}  // namespace msadj
