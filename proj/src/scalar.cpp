#include "aatkit/scalar.hpp"

#include "aatkit/error.hpp"

#include <cctype>

namespace aatkit {

std::string_view field_name(Field f) noexcept {
  return f == Field::rat ? "RAT" : "GAUSS";
}

Field parse_field(std::string_view s) {
  if (s == "RAT") return Field::rat;
  if (s == "GAUSS") return Field::gauss;
  fail(ErrorCode::parse_error, "unknown field tag '" + std::string(s) + "'");
}

Rational parse_rational(std::string_view s) {
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    fail(ErrorCode::parse_error, "malformed rational '" + std::string(s) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) fail(ErrorCode::parse_error, "zero denominator in '" + std::string(s) + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) fail(ErrorCode::invalid_input, "division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

void ExactScalar::add_product(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_real() && b.is_real()) {
    if (sgn(a.re_) == 0 || sgn(b.re_) == 0) return;
    Rational t = a.re_ * b.re_;
    re_ += t;
    return;
  }
  *this += a * b;
}

std::strong_ordering canonical_cmp(const ExactScalar& a, const ExactScalar& b) {
  if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(a.im_, b.im_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer ExactScalar::denominator_lcm() const {
  Integer l;
  mpz_lcm(l.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
  return l;
}

std::string ExactScalar::to_string() const {
  if (is_real()) return rational_string(re_);
  if (sgn(re_) == 0) return rational_string(im_) + "*i";
  std::string s = rational_string(re_);
  if (sgn(im_) > 0) s += "+";
  return s + rational_string(im_) + "*i";
}

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
  ExactScalar result(1);
  ExactScalar b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace aatkit
