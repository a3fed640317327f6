#pragma once

#include "aatkit/aat.hpp"
#include "aatkit/lattice.hpp"
#include "aatkit/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aatkit {

/// Companion extension psi = (psi_0, phi) with its rational addition data.
/// Only one-dimensional entries carry one.
struct Companion {
  std::vector<OdeSpec> psi;  // psi_0 first
  std::vector<std::pair<std::size_t, RationalFunction>> addition;
  std::vector<std::pair<std::size_t, RationalFunction>> negation;
  std::optional<Polynomial> relation;
};

struct GroupDescriptor {
  std::string name;
  Field field = Field::rat;
  std::size_t dimension = 1;
  std::vector<OdeSpec> odes;  // component i in variable i
  PeriodGroup periods;
  std::optional<Companion> companion;
  // budgets of the stored addition certificate
  unsigned degree_bound = 0;
  unsigned order = 0;

  GermMap germ(unsigned order) const;
  std::optional<RationalAdditionSystem> system(unsigned order) const;
};

// pi, omega_r, omega_i with 80-digit approximations.
const SymbolTable& catalog_symbols();

const std::vector<GroupDescriptor>& builtin_catalog();
// Throws not_found.
const GroupDescriptor& catalog_entry(const std::string& name);

struct RankRow {
  std::string name;
  std::size_t rank = 0;
};

struct RankPair {
  std::size_t first = 0;
  std::size_t second = 0;
  RankComparison comparison;
};

struct RankReport {
  std::vector<RankRow> rows;
  std::vector<RankPair> pairs;
};

RankReport rank_report(const std::vector<const GroupDescriptor*>& descriptors);

// ---------------------------------------------------------------------------

struct PeriodResidual {
  std::size_t generator = 0;
  std::string residual;  // decimal upper bound
};

struct PeriodCheckReport {
  Verdict verdict = Verdict::pass;
  unsigned digits = 0;
  unsigned samples = 0;
  std::string tolerance;
  std::string max_residual;
  std::vector<PeriodResidual> per_generator;
  std::string assumption;
};

/// max over deterministic samples u and generators lambda of |f(u+lambda) - f(u)|
/// in working precision well above `digits`. PASS when below 10^(-digits/2).
/// `periods` overrides the descriptor's declared group.
PeriodCheckReport numeric_period_check(const GroupDescriptor& d, unsigned digits, unsigned samples,
                                       const std::optional<PeriodGroup>& periods = std::nullopt);

struct NumericValue {
  std::string re;
  std::string im;
};

// One germ component at a Gaussian rational point, to `digits` significant
// digits, by the same evaluators the period check uses.
NumericValue numeric_value(const OdeSpec& spec, const ExactScalar& z, unsigned digits);

}  // namespace aatkit
