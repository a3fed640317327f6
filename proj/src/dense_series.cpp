#include "aatkit/dense_series.hpp"

#include "aatkit/error.hpp"

namespace aatkit {

namespace {
constexpr std::size_t kTableLimit = 2048;
}

DenseRing::DenseRing(std::size_t vars, unsigned order) : ranker_(vars, order), monomials_(ranker_.enumerate()) {
  degrees_.reserve(monomials_.size());
  for (const auto& m : monomials_) degrees_.push_back(m.total_degree());
  const std::size_t n = monomials_.size();
  if (n <= kTableLimit) {
    table_.assign(n * n, 0);
    MultiIndex sum(vars);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (degrees_[a] + degrees_[b] >= order) break;
        for (std::size_t j = 0; j < vars; ++j) sum[j] = monomials_[a][j] + monomials_[b][j];
        table_[a * n + b] = static_cast<std::uint32_t>(ranker_.rank(sum));
      }
  }
}

std::size_t DenseRing::product_rank(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * monomials_.size() + b];
  const std::size_t k = vars();
  unsigned buf[32];
  std::vector<unsigned> heap;
  unsigned* e = buf;
  if (k > 32) {
    heap.resize(k);
    e = heap.data();
  }
  for (std::size_t j = 0; j < k; ++j) e[j] = monomials_[a][j] + monomials_[b][j];
  return ranker_.rank(std::span<const unsigned>(e, k));
}

DenseSeries::DenseSeries(std::shared_ptr<const DenseRing> ring)
    : ring_(std::move(ring)), re_(ring_->size()), im_(ring_->size()) {}

DenseSeries DenseSeries::one(std::shared_ptr<const DenseRing> ring) {
  DenseSeries s(std::move(ring));
  if (s.ring_->size() > 0) s.re_[0] = 1;
  return s;
}

DenseSeries DenseSeries::from(const TruncatedSeries& s, std::shared_ptr<const DenseRing> ring) {
  if (s.vars() != ring->vars()) fail(ErrorCode::variable_mismatch, "dense series: variable count mismatch");
  if (s.order() < ring->order()) fail(ErrorCode::order_exceeded, "dense series: source order too low");
  DenseSeries d(std::move(ring));
  Integer den(1);
  for (const auto& t : s.terms()) {
    if (t.index.total_degree() >= d.ring_->order()) break;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.denominator_lcm().get_mpz_t());
    if (!t.coeff.is_real()) d.gaussian_ = true;
  }
  d.den_ = den;
  for (const auto& t : s.terms()) {
    if (t.index.total_degree() >= d.ring_->order()) break;
    const std::size_t r = d.ring_->rank(t.index);
    d.re_[r] = t.coeff.re().get_num() * (den / t.coeff.re().get_den());
    if (d.gaussian_) d.im_[r] = t.coeff.im().get_num() * (den / t.coeff.im().get_den());
  }
  return d;
}

ExactScalar DenseSeries::coeff(std::size_t r) const {
  Rational re(re_[r], den_);
  re.canonicalize();
  if (!gaussian_) return ExactScalar(std::move(re));
  Rational im(im_[r], den_);
  im.canonicalize();
  return ExactScalar(std::move(re), std::move(im));
}

DenseSeries DenseSeries::operator*(const DenseSeries& o) const {
  if (ring_ != o.ring_ && (ring_->vars() != o.ring_->vars() || ring_->order() != o.ring_->order()))
    fail(ErrorCode::variable_mismatch, "dense series from different rings");
  DenseSeries out(ring_);
  out.gaussian_ = gaussian_ || o.gaussian_;
  out.den_ = den_ * o.den_;
  const std::size_t n = ring_->size();
  const unsigned order = ring_->order();
  std::vector<std::size_t> nz_b;
  for (std::size_t b = 0; b < n; ++b)
    if (!o.is_zero_at(b)) nz_b.push_back(b);
  for (std::size_t a = 0; a < n; ++a) {
    if (is_zero_at(a)) continue;
    const unsigned da = ring_->degree(a);
    for (std::size_t b : nz_b) {
      if (da + ring_->degree(b) >= order) break;
      const std::size_t r = ring_->product_rank(a, b);
      if (!out.gaussian_) {
        mpz_addmul(out.re_[r].get_mpz_t(), re_[a].get_mpz_t(), o.re_[b].get_mpz_t());
      } else {
        // (x + iy)(u + iv) = (xu - yv) + i(xv + yu)
        mpz_addmul(out.re_[r].get_mpz_t(), re_[a].get_mpz_t(), o.re_[b].get_mpz_t());
        mpz_submul(out.re_[r].get_mpz_t(), im_[a].get_mpz_t(), o.im_[b].get_mpz_t());
        mpz_addmul(out.im_[r].get_mpz_t(), re_[a].get_mpz_t(), o.im_[b].get_mpz_t());
        mpz_addmul(out.im_[r].get_mpz_t(), im_[a].get_mpz_t(), o.re_[b].get_mpz_t());
      }
    }
  }
  out.reduce();
  return out;
}

void DenseSeries::reduce() {
  Integer g = den_;
  for (std::size_t r = 0; r < re_.size() && g != 1; ++r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re_[r].get_mpz_t());
    if (gaussian_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im_[r].get_mpz_t());
  }
  if (g == 1 || g == 0) return;
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  for (std::size_t r = 0; r < re_.size(); ++r) {
    if (sgn(re_[r]) != 0) mpz_divexact(re_[r].get_mpz_t(), re_[r].get_mpz_t(), g.get_mpz_t());
    if (gaussian_ && sgn(im_[r]) != 0) mpz_divexact(im_[r].get_mpz_t(), im_[r].get_mpz_t(), g.get_mpz_t());
  }
}

void DenseSeries::accumulate(std::vector<ExactScalar>& slots, const ExactScalar& c) const {
  for (std::size_t r = 0; r < re_.size(); ++r) {
    if (is_zero_at(r)) continue;
    slots[r].add_product(c, coeff(r));
  }
}

TruncatedSeries DenseSeries::to_series() const {
  std::vector<SeriesTerm> terms;
  for (std::size_t r = 0; r < re_.size(); ++r)
    if (!is_zero_at(r)) terms.push_back({ring_->monomial(r), coeff(r)});
  return TruncatedSeries::from_terms(ring_->vars(), ring_->order(), std::move(terms));
}

}  // namespace aatkit
