#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace aatkit {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Field { rat, gauss };

std::string_view field_name(Field f) noexcept;
Field parse_field(std::string_view s);

// Parses "p", "-p" or "p/q" into a canonical rational; throws parse_error.
Rational parse_rational(std::string_view s);
std::string rational_string(const Rational& q);

/// Element of Q or Q(i), kept as a pair of canonical rationals (re, im).
/// The field tag is derived: a scalar with zero imaginary part is rational.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : re_(v) {}                   // NOLINT
  ExactScalar(Rational re) : re_(std::move(re)) {}  // NOLINT
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  Field field() const noexcept { return is_real() ? Field::rat : Field::gauss; }

  ExactScalar conj() const { return {re_, -im_}; }
  // |z|^2, always rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  ExactScalar operator-() const { return {-re_, -im_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Total order used only for canonical tie breaks (re first, then im).
  friend std::strong_ordering canonical_cmp(const ExactScalar& a, const ExactScalar& b);

  // Accumulates a*b into *this without temporaries for the real fast path.
  void add_product(const ExactScalar& a, const ExactScalar& b);

  // Least common multiple of the denominators of re and im.
  Integer denominator_lcm() const;

  // "p/q" for rationals, "p/q + r/s*i" style for Gaussian values.
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

ExactScalar pow(const ExactScalar& base, unsigned exponent);

}  // namespace aatkit
