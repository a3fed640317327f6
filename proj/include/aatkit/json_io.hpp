#pragma once

// JSON forms of the library's values. Scalars are "p/q" strings or
// {"re": "p/q", "im": "r/s"}; series terms are [[e1, ..., ek], scalar].
// Readers accept exactly what the writers emit (plus a few shorthands noted
// below) and throw parse_error on anything else.

#include "aatkit/aat.hpp"
#include "aatkit/algdep.hpp"
#include "aatkit/branchres.hpp"
#include "aatkit/catalog.hpp"
#include "aatkit/lattice.hpp"
#include "aatkit/series.hpp"

#include <json.hpp>

namespace aatkit::io {

using Json = nlohmann::json;

Json to_json(const ExactScalar& x);
// Also accepts JSON integers.
ExactScalar scalar_from(const Json& j);
Rational rational_from(const Json& j);

Json to_json(const MultiIndex& m);
MultiIndex index_from(const Json& j, std::size_t vars);

Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from(const Json& j);

Json to_json(const OdeSpec& s);
OdeSpec ode_from(const Json& j);

Json to_json(const GermMap& m);
// {"components": [...]} or {"odes": [...], "order": N}.
GermMap germ_from(const Json& j);

// {"names": [...], "terms": [[e, c], ...], "text": "..."}; readers take the
// terms, or "text" when terms are absent. A bare string is parsed with
// `names`.
Json to_json(const Polynomial& p, std::span<const std::string> names);
Polynomial polynomial_from(const Json& j, std::span<const std::string> names);

Json to_json(const ResidualReport& r);
ResidualReport residual_from(const Json& j);

Json to_json(const Annihilator& a);
Annihilator annihilator_from(const Json& j);

Json to_json(const DependenceVerdict& v);
DependenceVerdict verdict_from(const Json& j);

Json to_json(const AatCertificate& c);
AatCertificate certificate_from(const Json& j);

Json to_json(const ConditionStar& s);
Json to_json(const Promotion& p);

Json to_json(const ScalarMatrix& a);
ScalarMatrix matrix_from(const Json& j);

Json to_json(const RationalAdditionSystem& s);
RationalAdditionSystem system_from(const Json& j);
Json to_json(const SystemReport& r);

Json to_json(const IsoWitness& w);
IsoWitness iso_from(const Json& j);

Json to_json(const GroupLawCheck& g);

Json to_json(const SymbolTable& t);
SymbolTable symbols_from(const Json& j);

Json to_json(const PeriodVector& v, const SymbolTable& t);
PeriodVector period_vector_from(const Json& j, const SymbolTable& t, std::size_t n);

// Includes the cached verdicts and the independence assumption.
Json to_json(const PeriodGroup& g);
PeriodGroup period_group_from(const Json& j);

Json to_json(const IndexResult& r);
Json to_json(const RankReport& r);

Json to_json(const UPoly& p);
UPoly upoly_from(const Json& j);
Json to_json(const RootInterval& r);
RootInterval interval_from(const Json& j);
Json to_json(const AlgebraicNumber& a);
AlgebraicNumber algebraic_from(const Json& j);
Json to_json(const BranchProblem& p);
BranchProblem branch_problem_from(const Json& j);
Json to_json(const Cell1D& c);
Cell1D cell_from(const Json& j);
Json to_json(const BranchHandle& h);
BranchHandle handle_from(const Json& j);

Json to_json(const PeriodCheckReport& r);
Json to_json(const GroupDescriptor& d);

// Deterministic text form used for every emitted document.
std::string dump(const Json& j);
Json parse(std::string_view text);

}  // namespace aatkit::io
