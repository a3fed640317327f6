#pragma once

#include "aatkit/algdep.hpp"
#include "aatkit/matrix.hpp"
#include "aatkit/polynomial.hpp"
#include "aatkit/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aatkit {

enum class Verdict { pass, fail, unresolved };

std::string_view verdict_name(Verdict v) noexcept;
Verdict parse_verdict(std::string_view s);

/// Germ-level addition theorem data for phi = (phi_1, ..., phi_n).
///
/// Annihilator variables are x1..xn = phi(u), x(n+1)..x(2n) = phi(v) and z,
/// the component phi_i(u+v).
struct AatCertificate {
  GermMap germ;
  unsigned degree_bound = 0;
  unsigned order = 0;
  std::vector<DependenceVerdict> components;
  DependenceVerdict independence;
  Verdict status = Verdict::unresolved;
};

// Names used for the basis of an n-dimensional addition check.
std::vector<std::string> aat_basis_names(std::size_t n);

/// Requires germ order >= N + kReverifyMargin. For each component the basis
/// is cut down to the series sharing coordinates with the target (products
/// of lower-dimensional germs search per factor); the annihilator is still
/// stated and verified over the full basis.
AatCertificate check_aat(const GermMap& m, unsigned d, unsigned N, const SearchOptions& options = {});

struct AatRecheck {
  bool ok = true;
  std::vector<ResidualReport> at_order;   // per component, at N
  std::vector<ResidualReport> at_margin;  // per component, at N + margin
  std::string message;
};

/// Re-derives the certificate's claims from its embedded germ: stored
/// annihilators are substituted at N and N + margin, independence and the
/// status are recomputed.
AatRecheck recheck_aat(const AatCertificate& c, const SearchOptions& options = {});

struct ConditionStar {
  Verdict verdict = Verdict::fail;
  ScalarMatrix linear;
  ExactScalar det;
};

ConditionStar check_condition_star(const GermMap& m);

struct Promotion {
  Verdict verdict = Verdict::fail;
  bool conjugation_fixed = false;
  ConditionStar star;
};

Promotion promote_real_to_complex(const GermMap& m);

// ---------------------------------------------------------------------------

struct RationalFunction {
  Polynomial num;
  Polynomial den;
};

/// psi_0..psi_m-1 in n variables. Addition entries are rational in
/// (x_0..x_m-1, y_0..y_m-1) = (psi(u), psi(v)); negation entries are
/// rational in x_0..x_m-1 = psi(u); the relation is a polynomial in x.
struct RationalAdditionSystem {
  std::vector<TruncatedSeries> psi;
  std::vector<std::pair<std::size_t, RationalFunction>> addition;
  std::vector<std::pair<std::size_t, RationalFunction>> negation;
  std::optional<Polynomial> relation;
};

struct SystemCheck {
  std::string kind;  // "addition", "negation" or "relation"
  std::size_t index = 0;
  ResidualReport residual;
};

struct SystemReport {
  bool clean = true;
  unsigned order = 0;
  std::vector<SystemCheck> checks;
};

SystemReport verify_rational_system(const RationalAdditionSystem& sys, unsigned N);

// ---------------------------------------------------------------------------

struct IsoWitness {
  Verdict verdict = Verdict::unresolved;
  ScalarMatrix alpha;
  unsigned degree_bound = 0;
  unsigned order = 0;
  // (g o alpha)_i over f_1..f_n, variables x1..xn, z
  std::vector<DependenceVerdict> components;
};

/// PASS when every (g o alpha)_i has a verified annihilator over f;
/// otherwise UNRESOLVED. Throws singular_alpha.
IsoWitness isomorphism_witness_check(const GermMap& f, const GermMap& g, const ScalarMatrix& alpha, unsigned d,
                                     unsigned N, const SearchOptions& options = {});

// ---------------------------------------------------------------------------

/// Phi(a, b) = phi(psi^-1(a) + psi^-1(b)) - phi(0) with psi = phi - phi(0),
/// as n series in 2n variables (a..., b...).
std::vector<TruncatedSeries> group_law(const GermMap& m);

struct GroupLawCheck {
  Verdict verdict = Verdict::unresolved;
  std::vector<DependenceVerdict> components;  // over a1..an, b1..bn
};

// Each Phi_i must be algebraic over Q(a, b) at the given budgets.
GroupLawCheck group_law_check(const GermMap& m, unsigned d, unsigned N, const SearchOptions& options = {});

}  // namespace aatkit
