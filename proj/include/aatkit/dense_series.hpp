#pragma once

#include "aatkit/multi_index.hpp"
#include "aatkit/scalar.hpp"
#include "aatkit/series.hpp"

#include <memory>
#include <vector>

namespace aatkit {

/// Shared monomial table for dense series of a fixed (vars, order) shape.
class DenseRing {
 public:
  DenseRing(std::size_t vars, unsigned order);

  std::size_t vars() const noexcept { return ranker_.vars(); }
  unsigned order() const noexcept { return ranker_.order(); }
  std::size_t size() const noexcept { return monomials_.size(); }
  const MultiIndex& monomial(std::size_t r) const { return monomials_[r]; }
  unsigned degree(std::size_t r) const { return degrees_[r]; }
  std::size_t rank(const MultiIndex& m) const { return ranker_.rank(m); }
  // rank of monomial(a) * monomial(b); caller guarantees degree(a)+degree(b) < order
  std::size_t product_rank(std::size_t a, std::size_t b) const;

 private:
  MonomialRanker ranker_;
  std::vector<MultiIndex> monomials_;
  std::vector<unsigned> degrees_;
  std::vector<std::uint32_t> table_;  // product ranks for small rings
};

/// Dense truncated series stored as integer numerators over one common
/// denominator. Products only need integer multiply-add, which keeps the
/// monomial tables of the dependence search cheap to build.
class DenseSeries {
 public:
  explicit DenseSeries(std::shared_ptr<const DenseRing> ring);

  static DenseSeries from(const TruncatedSeries& s, std::shared_ptr<const DenseRing> ring);
  static DenseSeries one(std::shared_ptr<const DenseRing> ring);

  const DenseRing& ring() const { return *ring_; }
  bool gaussian() const noexcept { return gaussian_; }
  const Integer& denominator() const noexcept { return den_; }
  const Integer& num_re(std::size_t r) const { return re_[r]; }
  const Integer& num_im(std::size_t r) const { return im_[r]; }
  bool is_zero_at(std::size_t r) const { return sgn(re_[r]) == 0 && (!gaussian_ || sgn(im_[r]) == 0); }
  ExactScalar coeff(std::size_t r) const;

  DenseSeries operator*(const DenseSeries& o) const;

  // slots[r] += c * coeff(r)
  void accumulate(std::vector<ExactScalar>& slots, const ExactScalar& c) const;

  TruncatedSeries to_series() const;

 private:
  void reduce();

  std::shared_ptr<const DenseRing> ring_;
  std::vector<Integer> re_;
  std::vector<Integer> im_;
  Integer den_{1};
  bool gaussian_ = false;
};

}  // namespace aatkit
