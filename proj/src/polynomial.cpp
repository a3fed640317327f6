#include "aatkit/polynomial.hpp"

#include "aatkit/dense_series.hpp"
#include "aatkit/error.hpp"

#include <algorithm>
#include <cctype>

namespace aatkit {

Polynomial Polynomial::constant(std::size_t vars, const ExactScalar& c) {
  Polynomial p(vars);
  p.add_term(MultiIndex(vars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t which) {
  Polynomial p(vars);
  p.add_term(MultiIndex::unit(vars, which), ExactScalar(1));
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& m, const ExactScalar& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

ExactScalar Polynomial::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& m, const ExactScalar& c) {
  if (m.size() != vars_) fail(ErrorCode::arity_mismatch, "monomial " + m.to_string() + " has wrong arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (vars_ != o.vars_) fail(ErrorCode::arity_mismatch, "adding polynomials in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (vars_ != o.vars_) fail(ErrorCode::arity_mismatch, "subtracting polynomials in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) fail(ErrorCode::arity_mismatch, "multiplying polynomials in different rings");
  Polynomial p(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma + mb, ca * cb);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(m == ib->first) || !(c == ib->second)) return false;
    ++ib;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(vars_, ExactScalar(1));
  Polynomial base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial p(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    MultiIndex d = m;
    d[var] -= 1;
    p.add_term(d, c * ExactScalar(static_cast<long>(m[var])));
  }
  return p;
}

ExactScalar Polynomial::evaluate(std::span<const ExactScalar> point) const {
  if (point.size() != vars_) fail(ErrorCode::arity_mismatch, "evaluation point has wrong arity");
  ExactScalar acc(0);
  for (const auto& [m, c] : terms_) {
    ExactScalar t = c;
    for (std::size_t j = 0; j < vars_; ++j)
      if (m[j] != 0) t *= aatkit::pow(point[j], m[j]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (values.size() != vars_) fail(ErrorCode::arity_mismatch, "substitution has wrong arity");
  const std::size_t target = values.empty() ? 0 : values.front().vars();
  Polynomial acc(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t j = 0; j < vars_; ++j)
      if (m[j] != 0) t = t * values[j].pow(m[j]);
    acc += t;
  }
  return acc;
}

TruncatedSeries Polynomial::substitute(std::span<const TruncatedSeries> series, std::optional<unsigned> order) const {
  if (series.size() != vars_)
    fail(ErrorCode::arity_mismatch, "polynomial in " + std::to_string(vars_) + " variables given " +
                                        std::to_string(series.size()) + " series");
  if (series.empty()) fail(ErrorCode::arity_mismatch, "substitution needs at least one series");
  const std::size_t k = series.front().vars();
  unsigned n = order.value_or(series.front().order());
  for (const auto& s : series) {
    if (s.vars() != k) fail(ErrorCode::variable_mismatch, "substituted series live in different rings");
    n = std::min(n, s.order());
  }
  auto ring = std::make_shared<const DenseRing>(k, n);
  std::vector<DenseSeries> base;
  for (const auto& s : series) base.push_back(DenseSeries::from(s, ring));
  // monomial series built by multiplying one variable at a time, memoized
  std::map<MultiIndex, DenseSeries, GradedBefore> memo;
  auto power_product = [&](auto&& self, const MultiIndex& e) -> const DenseSeries& {
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    std::size_t j = 0;
    while (j < e.size() && e[j] == 0) ++j;
    if (j == e.size()) return memo.emplace(e, DenseSeries::one(ring)).first->second;
    MultiIndex prev = e;
    prev[j] -= 1;
    DenseSeries value = self(self, prev) * base[j];
    return memo.emplace(e, std::move(value)).first->second;
  };
  std::vector<ExactScalar> slots(ring->size());
  for (const auto& [m, c] : terms_) power_product(power_product, m).accumulate(slots, c);
  std::vector<SeriesTerm> terms;
  for (std::size_t r = 0; r < slots.size(); ++r)
    if (!slots[r].is_zero()) terms.push_back({ring->monomial(r), std::move(slots[r])});
  return TruncatedSeries::from_terms(k, n, std::move(terms));
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Integer den(1), content(0);
  for (const auto& [m, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator_lcm().get_mpz_t());
  Polynomial p = *this;
  p *= ExactScalar(Rational(den));
  for (const auto& [m, c] : p.terms_) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.re().get_num_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.im().get_num_mpz_t());
  }
  if (content != 1) p *= ExactScalar(Rational(Integer(1), content));
  return p;
}

bool Polynomial::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coef = c.to_string();
    const bool unit = c.is_one();
    const bool neg_unit = c == ExactScalar(-1);
    std::string mono;
    for (std::size_t j = 0; j < vars_; ++j) {
      if (m[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += j < names.size() ? names[j] : "x" + std::to_string(j + 1);
      if (m[j] > 1) mono += "^" + std::to_string(m[j]);
    }
    std::string term;
    if (mono.empty())
      term = coef;
    else if (unit)
      term = mono;
    else if (neg_unit)
      term = "-" + mono;
    else
      term = (c.is_real() ? coef : "(" + coef + ")") + "*" + mono;
    if (!s.empty()) s += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else s = term;
  }
  return s;
}

MultiIndex lex_leading(const Polynomial& p, std::span<const std::size_t> priority) {
  if (p.is_zero()) fail(ErrorCode::invalid_input, "leading monomial of zero polynomial");
  const MultiIndex* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (best == nullptr || lex_compare(m, *best, priority) == std::strong_ordering::greater) best = &m;
  return *best;
}

std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) fail(ErrorCode::invalid_input, "division by zero polynomial");
  if (num.vars() != den.vars()) fail(ErrorCode::arity_mismatch, "dividing polynomials in different rings");
  std::vector<std::size_t> order(num.vars());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const MultiIndex lead_den = lex_leading(den, order);
  const ExactScalar lc_den = den.coeff(lead_den);
  Polynomial rem = num;
  Polynomial quot(num.vars());
  while (!rem.is_zero()) {
    const MultiIndex lead = lex_leading(rem, order);
    if (!lead.divisible_by(lead_den)) return std::nullopt;
    const Polynomial t = Polynomial::monomial(lead.minus(lead_den), rem.coeff(lead) / lc_den);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

Polynomial canonicalize(const Polynomial& p, std::span<const std::size_t> priority) {
  if (p.is_zero()) return p;
  Polynomial q = p.primitive_part();
  const ExactScalar lc = q.coeff(lex_leading(q, priority));
  if (sgn(lc.re()) < 0) {
    q *= ExactScalar(-1);
  } else if (sgn(lc.re()) == 0) {
    q *= sgn(lc.im()) > 0 ? ExactScalar(Rational(0), Rational(-1)) : ExactScalar::i();
  }
  return q;
}

std::vector<std::string> default_names(std::size_t vars, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

}  // namespace aatkit

namespace aatkit {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> names) : s_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse_error, "polynomial: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    Polynomial acc(names_.size());
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!first && !eat('+')) break;
      else if (first) eat('+');
      Polynomial t = product();
      acc += neg ? -t : t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("exponent expected");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (eat('(')) {
      Polynomial p = sum();
      if (!eat(')')) error("')' expected");
      return p;
    }
    if (pos_ >= s_.size()) error("operand expected");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      // "p/q" directly after digits is a rational literal
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return Polynomial::constant(names_.size(), ExactScalar(parse_rational(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view id = s_.substr(start, pos_ - start);
      for (std::size_t j = 0; j < names_.size(); ++j)
        if (names_[j] == id) return Polynomial::variable(names_.size(), j);
      if (id == "I" || id == "i") return Polynomial::constant(names_.size(), ExactScalar::i());
      pos_ = start;
      error("unknown variable '" + std::string(id) + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  return PolyParser(text, names).parse();
}

}  // namespace aatkit
