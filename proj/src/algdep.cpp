#include "aatkit/algdep.hpp"

#include "aatkit/dense_series.hpp"
#include "aatkit/error.hpp"
#include "aatkit/exact_linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>

namespace aatkit {

std::string ResidualReport::describe() const {
  if (clean) return "CLEAN(" + std::to_string(order) + ")";
  if (!residual) return "RESIDUAL";
  return "RESIDUAL at " + residual->index.to_string() + " = " + residual->coeff.to_string();
}

std::vector<std::size_t> Annihilator::priority() const {
  const std::size_t m = names.size();
  std::vector<std::size_t> p;
  if (has_target && m > 0) p.push_back(m - 1);
  for (std::size_t i = 0; i + (has_target ? 1 : 0) < m; ++i) p.push_back(i);
  return p;
}

std::string_view outcome_name(DependenceOutcome o) noexcept {
  switch (o) {
    case DependenceOutcome::dependent: return "DEPENDENT";
    case DependenceOutcome::independent_up_to: return "INDEPENDENT_UP_TO";
    case DependenceOutcome::unconfirmed: return "UNCONFIRMED";
  }
  return "?";
}

namespace {

// The series rewritten over the coordinates they actually use (at least one).
// Entries with `skip[i]` set are replaced by zero; they must not matter.
std::vector<TruncatedSeries> compact_ring(std::span<const TruncatedSeries> series, const std::vector<bool>& skip,
                                          std::vector<std::size_t>* kept = nullptr) {
  const std::size_t k = series.front().vars();
  std::vector<bool> used(k, false);
  for (std::size_t i = 0; i < series.size(); ++i)
    if (!skip[i])
      for (std::size_t j : series[i].support()) used[j] = true;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < k; ++j)
    if (used[j]) keep.push_back(j);
  if (keep.empty()) keep.push_back(0);
  if (kept) *kept = keep;
  std::vector<TruncatedSeries> out;
  for (std::size_t i = 0; i < series.size(); ++i)
    out.push_back(skip[i] ? TruncatedSeries(keep.size(), series[i].order()) : series[i].restricted(keep));
  return out;
}

}  // namespace

ResidualReport verify_polynomial(const Polynomial& p, std::span<const TruncatedSeries> assignment, unsigned N) {
  if (assignment.size() != p.vars())
    fail(ErrorCode::arity_mismatch, "annihilator has " + std::to_string(p.vars()) + " variables but " +
                                        std::to_string(assignment.size()) + " series were given");
  for (const auto& s : assignment)
    if (s.order() < N)
      fail(ErrorCode::order_exceeded, "series of order " + std::to_string(s.order()) +
                                          " cannot be checked to order " + std::to_string(N));
  if (assignment.empty()) fail(ErrorCode::arity_mismatch, "nothing to substitute");
  for (const auto& s : assignment)
    if (s.vars() != assignment.front().vars())
      fail(ErrorCode::variable_mismatch, "series live in rings of different dimension");
  std::vector<bool> skip(p.vars());
  for (std::size_t i = 0; i < p.vars(); ++i) skip[i] = p.degree_in(i) == 0;
  std::vector<std::size_t> keep;
  const auto compact = compact_ring(assignment, skip, &keep);
  const TruncatedSeries r = p.substitute(compact, N);
  ResidualReport rep;
  rep.order = N;
  rep.clean = r.is_zero();
  if (!rep.clean) {
    // report the residual in the caller's coordinates
    SeriesTerm t = *r.first_nonzero();
    MultiIndex full(assignment.front().vars());
    for (std::size_t i = 0; i < keep.size(); ++i) full[keep[i]] = t.index[i];
    rep.residual = SeriesTerm{std::move(full), std::move(t.coeff)};
  }
  return rep;
}

ResidualReport verify_annihilator(const Annihilator& a, std::span<const TruncatedSeries> assignment, unsigned N) {
  if (assignment.size() != a.names.size())
    fail(ErrorCode::arity_mismatch, "annihilator names " + std::to_string(a.names.size()) + " variables but " +
                                        std::to_string(assignment.size()) + " series were given");
  return verify_polynomial(a.poly, assignment, N);
}

namespace {

constexpr std::array<std::uint64_t, 3> kPrimes = {2147483647ULL, 2147483629ULL, 2147483587ULL};

struct Column {
  MultiIndex mono;
};

// Ascending order used for kernel canonicalization: total degree first, then
// lexicographic with the variables visited in `priority` order.
bool column_less(const MultiIndex& a, const MultiIndex& b, std::span<const std::size_t> priority) {
  const unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return lex_compare(a, b, priority) == std::strong_ordering::less;
}

// Rows (mod p) that are linearly independent, scanned in the given order;
// stops early once the rank reaches the column count.
std::vector<std::size_t> independent_rows_mod_p(const RingMatrix<Integer>& a, std::size_t cols, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> pivot_rows(cols);
  std::vector<std::size_t> selected;
  std::vector<std::uint64_t> row(cols);
  for (std::size_t i = 0; i < a.size() && selected.size() < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) row[j] = mpz_fdiv_ui(a[i][j].get_mpz_t(), p);
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] == 0) continue;
      if (!pivot_rows[c].empty()) {
        const std::uint64_t f = row[c];
        const auto& pr = pivot_rows[c];
        for (std::size_t j = c; j < cols; ++j)
          if (pr[j] != 0) row[j] = (row[j] + (p - pr[j]) * f) % p;
        continue;
      }
      // normalize to a leading one
      std::uint64_t inv = 1, base = row[c], e = p - 2;
      while (e) {
        if (e & 1U) inv = inv * base % p;
        base = base * base % p;
        e >>= 1U;
      }
      for (std::size_t j = c; j < cols; ++j) row[j] = row[j] * inv % p;
      pivot_rows[c] = row;
      selected.push_back(i);
      break;
    }
  }
  return selected;
}

struct KernelCandidate {
  std::vector<ExactScalar> vector;
  std::size_t kernel_dimension = 0;
  bool found = false;
  bool basis_dependent = false;
};

template <class R>
KernelCandidate pick_candidate(RingMatrix<R> rows, std::size_t cols, const R& one,
                               const std::vector<Column>& columns, std::optional<std::size_t> target) {
  std::vector<std::size_t> pivots;
  if constexpr (std::is_same_v<R, Integer>)
    pivots = bareiss_forward_integer(rows, cols);
  else
    pivots = bareiss_forward(rows, cols, one);
  rows.resize(pivots.size());
  KernelCandidate out;
  out.kernel_dimension = cols - pivots.size();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    auto v = echelon_kernel_vector(rows, pivots, f);
    bool involves_target = !target.has_value();
    if (target)
      for (std::size_t j = 0; j < cols && !involves_target; ++j)
        if (!v[j].is_zero() && columns[j].mono[*target] > 0) involves_target = true;
    if (involves_target) {
      out.vector = std::move(v);
      out.found = true;
      return out;
    }
    out.basis_dependent = true;
  }
  return out;
}

void normalize_row(std::vector<Integer>& row) {
  Integer g(0);
  for (const auto& x : row) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : row)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

DependenceVerdict search(std::span<const TruncatedSeries> input, bool has_target, unsigned d, unsigned N,
                         const SearchOptions& options) {
  if (input.empty()) fail(ErrorCode::invalid_input, "dependence search needs at least one series");
  for (const auto& s : input)
    if (s.vars() != input.front().vars())
      fail(ErrorCode::variable_mismatch, "series live in rings of different dimension");
  // coordinates no series depends on only inflate the equation count
  const std::vector<TruncatedSeries> compact = compact_ring(input, std::vector<bool>(input.size(), false));
  const std::span<const TruncatedSeries> series(compact);
  if (d < 1) fail(ErrorCode::invalid_input, "degree bound must be at least 1");
  if (N <= d)
    fail(ErrorCode::order_too_low, "order " + std::to_string(N) + " must exceed degree bound " + std::to_string(d));
  const std::size_t k = series.front().vars();
  for (const auto& s : series) {
    if (s.vars() != k) fail(ErrorCode::variable_mismatch, "series live in rings of different dimension");
    if (s.order() < N + kReverifyMargin)
      fail(ErrorCode::order_exceeded, "series order " + std::to_string(s.order()) +
                                          " is below the re-verification order " +
                                          std::to_string(N + kReverifyMargin));
  }
  const std::size_t m = series.size();

  std::vector<std::string> names = options.basis_names;
  const std::size_t basis_count = has_target ? m - 1 : m;
  if (names.empty()) names = default_names(basis_count);
  if (names.size() != basis_count) fail(ErrorCode::arity_mismatch, "wrong number of basis names");
  if (has_target) names.push_back(options.target_name);

  std::vector<std::size_t> priority;
  if (has_target) priority.push_back(m - 1);
  for (std::size_t i = 0; i < basis_count; ++i) priority.push_back(i);

  std::vector<MultiIndex> monos = monomials_up_to(m, d);
  if (monos.size() > options.max_monomials)
    fail(ErrorCode::budget_exceeded, std::to_string(monos.size()) + " unknowns exceed the cap of " +
                                         std::to_string(options.max_monomials));
  std::sort(monos.begin(), monos.end(),
            [&](const MultiIndex& a, const MultiIndex& b) { return column_less(a, b, priority); });
  std::vector<Column> columns;
  for (auto& mono : monos) columns.push_back({mono});
  const std::size_t cols = columns.size();

  // Monomial series in integer-scaled dense form.
  auto ring = std::make_shared<const DenseRing>(k, N);
  std::vector<DenseSeries> base;
  bool gaussian = false;
  for (const auto& s : series) {
    base.push_back(DenseSeries::from(s, ring));
    gaussian = gaussian || base.back().gaussian();
  }
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
  std::vector<const DenseSeries*> col_series;
  Integer lcm(1);
  for (const auto& c : columns) {
    col_series.push_back(&power_product(power_product, c.mono));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), col_series.back()->denominator().get_mpz_t());
  }
  std::vector<Integer> scale;
  for (const auto* s : col_series) scale.push_back(lcm / s->denominator());

  DependenceVerdict verdict;
  verdict.degree_bound = d;
  verdict.order = N;
  verdict.unknowns = cols;

  // Equations in streaming order: coefficient index by increasing degree.
  KernelCandidate cand;
  if (!gaussian) {
    RingMatrix<Integer> rows;
    for (std::size_t r = 0; r < ring->size(); ++r) {
      std::vector<Integer> row(cols);
      bool any = false;
      for (std::size_t j = 0; j < cols; ++j) {
        const Integer& x = col_series[j]->num_re(r);
        if (sgn(x) == 0) continue;
        row[j] = x * scale[j];
        any = true;
      }
      if (!any) continue;
      normalize_row(row);
      rows.push_back(std::move(row));
    }
    verdict.equations = rows.size();
    auto exact_rows = [&](const std::vector<std::size_t>& pick) {
      RingMatrix<Integer> out;
      for (std::size_t i : pick) out.push_back(rows[i]);
      return out;
    };
    bool settled = false;
    for (std::uint64_t p : kPrimes) {
      const auto pick = independent_rows_mod_p(rows, cols, p);
      if (pick.size() == cols) {
        // full column rank modulo p implies full rank over Q
        cand = KernelCandidate{};
        settled = true;
        break;
      }
      cand = pick_candidate(exact_rows(pick), cols, Integer(1), columns,
                            has_target ? std::optional<std::size_t>(m - 1) : std::nullopt);
      if (!cand.found) {
        // the exact kernel is contained in the kernel of the picked rows
        settled = true;
        break;
      }
      // the candidate must annihilate every equation, not only the picked rows
      if (cand.found) {
        Rational total(0);
        bool all_zero = true;
        for (std::size_t i = 0; i < rows.size() && all_zero; ++i) {
          total = 0;
          for (std::size_t j = 0; j < cols; ++j)
            if (sgn(rows[i][j]) != 0 && !cand.vector[j].is_zero()) total += Rational(rows[i][j]) * cand.vector[j].re();
          all_zero = sgn(total) == 0;
        }
        if (all_zero) {
          settled = true;
          break;
        }
      }
    }
    if (!settled)
      cand = pick_candidate(std::move(rows), cols, Integer(1), columns,
                            has_target ? std::optional<std::size_t>(m - 1) : std::nullopt);
  } else {
    RingMatrix<GaussInt> rows;
    for (std::size_t r = 0; r < ring->size(); ++r) {
      std::vector<GaussInt> row(cols);
      bool any = false;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_series[j]->is_zero_at(r)) continue;
        row[j] = GaussInt{col_series[j]->num_re(r) * scale[j], col_series[j]->num_im(r) * scale[j]};
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
    verdict.equations = rows.size();
    cand = pick_candidate(std::move(rows), cols, GaussInt{Integer(1), Integer(0)}, columns,
                          has_target ? std::optional<std::size_t>(m - 1) : std::nullopt);
  }
  verdict.kernel_dimension = cand.kernel_dimension;
  verdict.basis_dependent = cand.basis_dependent;
  if (!cand.found) {
    verdict.outcome = DependenceOutcome::independent_up_to;
    return verdict;
  }

  Polynomial poly(m);
  for (std::size_t j = 0; j < cols; ++j) poly.add_term(columns[j].mono, cand.vector[j]);
  Annihilator ann;
  ann.names = names;
  ann.has_target = has_target;
  ann.poly = canonicalize(poly, priority);
  ann.degree = ann.poly.total_degree();
  ann.verified_order = N;

  const ResidualReport at_n = verify_polynomial(ann.poly, series, N);
  if (!at_n.clean) fail(ErrorCode::internal, "kernel vector does not annihilate the search system");
  ann.residual = verify_polynomial(ann.poly, series, N + kReverifyMargin);
  if (ann.residual.clean) {
    verdict.outcome = DependenceOutcome::dependent;
    verdict.annihilator = std::move(ann);
  } else {
    verdict.outcome = DependenceOutcome::unconfirmed;
    verdict.rejected = std::move(ann);
  }
  return verdict;
}

}  // namespace

DependenceVerdict find_annihilator(const TruncatedSeries& target, std::span<const TruncatedSeries> basis, unsigned d,
                                   unsigned N, const SearchOptions& options) {
  std::vector<TruncatedSeries> all(basis.begin(), basis.end());
  all.push_back(target);
  return search(all, true, d, N, options);
}

DependenceVerdict independence_verdict(std::span<const TruncatedSeries> series, unsigned d, unsigned N,
                                       const SearchOptions& options) {
  return search(series, false, d, N, options);
}

}  // namespace aatkit
