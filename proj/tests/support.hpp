#pragma once

#include "aatkit/catalog.hpp"
#include "aatkit/error.hpp"
#include "aatkit/series.hpp"

#include <doctest.h>
#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

namespace aatkit::test {

inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t vars, unsigned order, bool unit = false) {
  std::vector<SeriesTerm> terms;
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), keep(0, 2);
  for (const auto& m : monomials_up_to(vars, order - 1)) {
    if (keep(rng) == 0) continue;
    Rational q(num(rng), den(rng));
    q.canonicalize();
    terms.push_back({m, ExactScalar(q)});
  }
  auto s = TruncatedSeries::from_terms(vars, order, std::move(terms));
  if (unit) s = add(s, TruncatedSeries::constant(vars, order, ExactScalar(Rational(1) - s.constant_term().re())));
  return s;
}

inline TruncatedSeries univariate_of(const OdeSpec& spec, unsigned order) { return generate_series(spec, order); }

inline OdeSpec kind(OdeKind k) {
  OdeSpec s;
  s.kind = k;
  return s;
}

inline OdeSpec weierstrass_spec() { return OdeSpec::weierstrass(ExactScalar(0), ExactScalar(-4), ExactScalar(0), ExactScalar(2)); }

// |a - b| < 10^-digits for decimal strings.
inline bool decimal_close(const std::string& a, const std::string& b, int digits) {
  const mp_bitcnt_t prec = 512;
  mpf_class x(a, prec), y(b, prec), tol(1, prec);
  for (int i = 0; i < digits; ++i) tol /= 10;
  mpf_class d = x - y;
  return abs(d) < tol;
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ok;
}

}  // namespace aatkit::test
