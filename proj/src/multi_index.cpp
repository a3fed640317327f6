#include "aatkit/multi_index.hpp"

namespace aatkit {

std::string MultiIndex::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + "]";
}

bool graded_before(const MultiIndex& a, const MultiIndex& b) noexcept {
  const unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b,
                                 std::span<const std::size_t> priority) noexcept {
  for (std::size_t v : priority)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

MonomialRanker::MonomialRanker(std::size_t vars, unsigned order) : vars_(vars), order_(order) {
  const std::size_t n = order + vars + 2;
  pascal_.assign(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    pascal_[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) pascal_[i][j] = pascal_[i - 1][j - 1] + pascal_[i - 1][j];
  }
  count_ = vars_ == 0 ? (order_ > 0 ? 1 : 0) : binom(order_ + vars_ - 1, vars_);
}

std::size_t MonomialRanker::binom(std::size_t n, std::size_t k) const noexcept {
  if (k > n) return 0;
  return pascal_[n][k];
}

std::size_t MonomialRanker::degree_offset(unsigned t) const noexcept {
  if (vars_ == 0) return 0;
  if (t == 0) return 0;
  return binom(t + vars_ - 1, vars_);
}

std::size_t MonomialRanker::rank(const MultiIndex& m) const noexcept { return rank(m.exponents()); }

std::size_t MonomialRanker::rank(std::span<const unsigned> e) const noexcept {
  unsigned t = 0;
  for (unsigned x : e) t += x;
  std::size_t pos = degree_offset(t);
  unsigned remaining = t;
  const std::size_t k = vars_;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    // exponent vectors with a larger j-th entry (same prefix) come first
    const unsigned gap = remaining - e[j];
    if (gap > 0) pos += binom(gap + k - j - 2, k - j - 1);
    remaining -= e[j];
  }
  return pos;
}

std::vector<MultiIndex> MonomialRanker::enumerate() const {
  if (order_ == 0) return {};
  return monomials_up_to(vars_, order_ - 1);
}

namespace {

void fill_degree(std::size_t vars, unsigned remaining, std::size_t pos, MultiIndex& cur,
                 std::vector<MultiIndex>& out) {
  if (pos + 1 == vars) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    fill_degree(vars, remaining - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_up_to(std::size_t vars, unsigned bound) {
  std::vector<MultiIndex> out;
  if (vars == 0) {
    out.emplace_back();
    return out;
  }
  for (unsigned t = 0; t <= bound; ++t) {
    MultiIndex cur(vars);
    fill_degree(vars, t, 0, cur, out);
  }
  return out;
}

}  // namespace aatkit
