#pragma once

#include "aatkit/polynomial.hpp"
#include "aatkit/series.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aatkit {

inline constexpr unsigned kReverifyMargin = 8;
inline constexpr std::size_t kDefaultMaxMonomials = 20000;

/// Outcome of substituting series into a polynomial.
struct ResidualReport {
  bool clean = false;
  unsigned order = 0;                  // order the check was carried to
  std::optional<SeriesTerm> residual;  // first nonzero coefficient when not clean

  std::string describe() const;
};

/// Polynomial witness of an algebraic dependence among named series.
struct Annihilator {
  std::vector<std::string> names;  // one per variable
  Polynomial poly;
  unsigned degree = 0;          // total degree of poly
  unsigned verified_order = 0;  // N of the search
  ResidualReport residual;      // re-check at N + kReverifyMargin
  bool has_target = false;      // last variable is the search target

  std::vector<std::size_t> priority() const;
};

enum class DependenceOutcome {
  dependent,          // verified annihilator found
  independent_up_to,  // no relation of degree <= d visible through order N
  unconfirmed,        // the kernel candidate failed the higher-order re-check
};

std::string_view outcome_name(DependenceOutcome o) noexcept;

struct DependenceVerdict {
  DependenceOutcome outcome = DependenceOutcome::independent_up_to;
  std::optional<Annihilator> annihilator;
  unsigned degree_bound = 0;
  unsigned order = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t kernel_dimension = 0;
  // kernel was nonzero but no kernel vector involves the target
  bool basis_dependent = false;
  // the rejected candidate, when outcome is unconfirmed
  std::optional<Annihilator> rejected;

  bool dependent() const noexcept { return outcome == DependenceOutcome::dependent; }
};

struct SearchOptions {
  std::size_t max_monomials = kDefaultMaxMonomials;
  std::vector<std::string> basis_names;  // default x1..xm
  std::string target_name = "z";
};

/// Searches for P of total degree <= d with P(basis..., target) = 0 through
/// order N. The returned annihilator is primitive, its lex-leading
/// coefficient (target compared first) is positive, and among all kernel
/// vectors involving the target it has the smallest graded leading monomial.
DependenceVerdict find_annihilator(const TruncatedSeries& target, std::span<const TruncatedSeries> basis,
                                   unsigned d, unsigned N, const SearchOptions& options = {});

/// Joint kernel: any nonzero P of degree <= d with P(series...) = 0.
DependenceVerdict independence_verdict(std::span<const TruncatedSeries> series, unsigned d, unsigned N,
                                       const SearchOptions& options = {});

/// Re-checks an annihilator by substitution; reports the first nonzero
/// residual coefficient, or CLEAN(N).
ResidualReport verify_annihilator(const Annihilator& a, std::span<const TruncatedSeries> assignment, unsigned N);
ResidualReport verify_polynomial(const Polynomial& p, std::span<const TruncatedSeries> assignment, unsigned N);

}  // namespace aatkit
