#pragma once

#include <mpfr.h>

#include <utility>

#include "symprod/arith/integer.hpp"

namespace symprod::detail {

// Minimal RAII handle on an mpfr_t with an explicit bit precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_ui(v_, 0, MPFR_RNDN);
  }
  Real(mpfr_prec_t prec, const Rational& q) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(mpfr_prec_t prec, const Integer& z) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator+(Real a, const Real& b) { return a += b; }
  Real& div(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real abs() const {
    Real r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real log() const {
    Real r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& scale_2exp(long e) {
    mpfr_mul_2si(v_, v_, e, MPFR_RNDN);
    return *this;
  }
  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

}  // namespace symprod::detail
