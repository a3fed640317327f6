#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace aatkit {

/// Exponent vector of a monomial.
///
/// The canonical iteration order used everywhere in the library is graded
/// lexicographic: ascending total degree, and inside one degree the
/// lexicographically larger exponent vector first (x1^2, x1 x2, x2^2, ...).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t vars) : e_(vars, 0) {}
  MultiIndex(std::initializer_list<unsigned> e) : e_(e.begin(), e.end()) {}
  explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}

  static MultiIndex unit(std::size_t vars, std::size_t which, unsigned power = 1) {
    MultiIndex m(vars);
    m.e_[which] = power;
    return m;
  }

  std::size_t size() const noexcept { return e_.size(); }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  unsigned& operator[](std::size_t i) noexcept { return e_[i]; }
  std::span<const unsigned> exponents() const noexcept { return e_; }

  unsigned total_degree() const noexcept {
    unsigned t = 0;
    for (unsigned x : e_) t += x;
    return t;
  }

  MultiIndex& operator+=(const MultiIndex& o) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }

  // Component-wise a >= b.
  bool divisible_by(const MultiIndex& b) const noexcept {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] < b.e_[i]) return false;
    return true;
  }
  MultiIndex minus(const MultiIndex& b) const {
    MultiIndex r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string() const;

 private:
  std::vector<unsigned> e_;
};

// Strict graded-lex "comes before" in canonical iteration order.
bool graded_before(const MultiIndex& a, const MultiIndex& b) noexcept;

// Plain lexicographic comparison of exponent vectors, variables visited in
// the order given by `priority` (a permutation of 0..k-1).
std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b,
                                 std::span<const std::size_t> priority) noexcept;

struct GradedBefore {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const noexcept {
    return graded_before(a, b);
  }
};

/// Dense position of a monomial among all monomials of total degree < order
/// in `vars` variables, enumerated in canonical graded-lex order.
class MonomialRanker {
 public:
  MonomialRanker(std::size_t vars, unsigned order);

  std::size_t vars() const noexcept { return vars_; }
  unsigned order() const noexcept { return order_; }
  std::size_t count() const noexcept { return count_; }
  std::size_t rank(const MultiIndex& m) const noexcept;
  std::size_t rank(std::span<const unsigned> e) const noexcept;
  // First rank of degree t.
  std::size_t degree_offset(unsigned t) const noexcept;
  // All monomials of degree < order, in rank order.
  std::vector<MultiIndex> enumerate() const;

 private:
  std::size_t binom(std::size_t n, std::size_t k) const noexcept;

  std::size_t vars_;
  unsigned order_;
  std::size_t count_;
  std::vector<std::vector<std::size_t>> pascal_;
};

// All exponent vectors in `vars` variables of total degree <= bound, in
// canonical graded-lex order.
std::vector<MultiIndex> monomials_up_to(std::size_t vars, unsigned bound);

}  // namespace aatkit
