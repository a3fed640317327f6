#pragma once

// Minimal RAII wrapper over MPFR with a per-value precision, plus a complex
// pair. Internal to the library; every value carries its own precision so
// no process-wide default is touched.

#include "aatkit/scalar.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace aatkit::mp {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec), mpfr_set_zero(v_, 1); }
  Real(mpfr_prec_t prec, long x) : Real(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(mpfr_prec_t prec, const Rational& q) : Real(prec) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  // Returns false-like NaN on malformed input; callers validate first.
  Real(mpfr_prec_t prec, const std::string& decimal) : Real(prec) {
    mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
  }
  Real(const Real& o) : Real(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  Real& operator+=(const Real& o) { return mpfr_add(v_, v_, o.v_, MPFR_RNDN), *this; }
  Real& operator-=(const Real& o) { return mpfr_sub(v_, v_, o.v_, MPFR_RNDN), *this; }
  Real& operator*=(const Real& o) { return mpfr_mul(v_, v_, o.v_, MPFR_RNDN), *this; }
  Real& operator/=(const Real& o) { return mpfr_div(v_, v_, o.v_, MPFR_RNDN), *this; }
  Real& operator*=(long k) { return mpfr_mul_si(v_, v_, k, MPFR_RNDN), *this; }
  Real& operator/=(long k) { return mpfr_div_si(v_, v_, k, MPFR_RNDN), *this; }
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

  // mantissa digits in scientific notation, e.g. "1.23457e-31"
  std::string sci(int digits = 6) const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Re", digits - 1, v_);
    return buf;
  }

 private:
  mpfr_t v_;
};

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
inline Real apply(const Real& x) {
  Real r(x.prec());
  F(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real sqrt(const Real& x) { return apply<mpfr_sqrt>(x); }
inline Real exp(const Real& x) { return apply<mpfr_exp>(x); }
inline Real log(const Real& x) { return apply<mpfr_log>(x); }
inline Real sin(const Real& x) { return apply<mpfr_sin>(x); }
inline Real cos(const Real& x) { return apply<mpfr_cos>(x); }
inline Real sinh(const Real& x) { return apply<mpfr_sinh>(x); }
inline Real cosh(const Real& x) { return apply<mpfr_cosh>(x); }
inline Real abs(const Real& x) { return apply<mpfr_abs>(x); }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

// 10^k at the given precision.
inline Real pow10(mpfr_prec_t prec, long k) {
  Real r(prec, 10);
  mpfr_pow_si(r.get(), r.get(), k, MPFR_RNDN);
  return r;
}

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(mpfr_prec_t prec, const ExactScalar& c) : re(prec, c.re()), im(prec, c.im()) {}

  mpfr_prec_t prec() const { return re.prec(); }
  Complex& operator+=(const Complex& o) { return re += o.re, im += o.im, *this; }
  Complex& operator-=(const Complex& o) { return re -= o.re, im -= o.im, *this; }
  Complex& operator*=(const Real& s) { return re *= s, im *= s, *this; }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Complex operator-() const { return {-re, -im}; }
  Real abs() const { return sqrt(re * re + im * im); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
};

inline Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}
inline Complex sin(const Complex& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }
inline Complex cos(const Complex& z) { return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))}; }

}  // namespace aatkit::mp
