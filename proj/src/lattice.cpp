#include "aatkit/lattice.hpp"

#include "aatkit/error.hpp"
#include "aatkit/exact_linalg.hpp"
#include "aatkit/polynomial.hpp"

#include <set>

namespace aatkit {

SymbolTable::SymbolTable(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty() || s.name == kUnitSymbol)
      fail(ErrorCode::invalid_input, "symbol name '" + s.name + "' is reserved");
    if (!seen.insert(s.name).second) fail(ErrorCode::invalid_input, "duplicate symbol '" + s.name + "'");
  }
}

std::optional<std::size_t> SymbolTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::size_t SymbolTable::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) fail(ErrorCode::invalid_input, "unknown symbol '" + name + "'");
  return *i;
}

std::string SymbolTable::assumption() const {
  if (symbols_.empty()) return "no symbols";
  std::string s = "assumed real and algebraically independent over Q:";
  for (const auto& x : symbols_) s += " " + x.name;
  return s;
}

bool operator==(const SymbolTable& a, const SymbolTable& b) {
  if (a.symbols_.size() != b.symbols_.size()) return false;
  for (std::size_t i = 0; i < a.symbols_.size(); ++i)
    if (a.symbols_[i].name != b.symbols_[i].name) return false;
  return true;
}

// ---------------------------------------------------------------------------

void PeriodVector::add(std::size_t i, std::size_t slot, const ExactScalar& c) {
  if (i >= coords_.size()) fail(ErrorCode::arity_mismatch, "period coordinate out of range");
  auto& coord = coords_[i];
  auto [it, inserted] = coord.try_emplace(slot, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) coord.erase(it);
}

bool PeriodVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.empty()) return false;
  return true;
}

PeriodVector PeriodVector::operator*(const ExactScalar& c) const {
  PeriodVector out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (const auto& [slot, x] : coords_[i]) out.add(i, slot, x * c);
  return out;
}

PeriodVector PeriodVector::conj() const {
  PeriodVector out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (const auto& [slot, x] : coords_[i]) out.add(i, slot, x.conj());
  return out;
}

std::vector<Rational> PeriodVector::rational_expansion(std::size_t symbols) const {
  const std::size_t per = 2 * (symbols + 1);
  std::vector<Rational> out(per * coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (const auto& [slot, x] : coords_[i]) {
      if (slot > symbols) fail(ErrorCode::invalid_input, "period vector uses a symbol outside the table");
      out[i * per + 2 * slot] = x.re();
      out[i * per + 2 * slot + 1] = x.im();
    }
  return out;
}

std::string PeriodVector::to_string(const SymbolTable& table) const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    if (coords_[i].empty()) {
      s += "0";
      continue;
    }
    bool first = true;
    for (const auto& [slot, x] : coords_[i]) {
      if (!first) s += " + ";
      first = false;
      s += "(" + x.to_string() + ")";
      if (slot > 0) s += "*" + table.symbols()[slot - 1].name;
    }
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<Rational>> expansion_rows(const PeriodGroup& g) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : g.generators()) rows.push_back(v.rational_expansion(g.table().size()));
  return rows;
}

Integer denominator_lcm(const std::vector<std::vector<Rational>>& rows) {
  Integer l(1);
  for (const auto& r : rows)
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

std::optional<std::vector<Integer>> scaled_integers(const std::vector<Rational>& row, const Integer& l) {
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& x : row) {
    const Rational y = x * l;
    if (y.get_den() != 1) return std::nullopt;
    out.push_back(y.get_num());
  }
  return out;
}

struct Membership {
  Integer scale;
  HermiteForm hnf;
  std::size_t width = 0;
};

Membership membership_data(const PeriodGroup& g) {
  const auto rows = expansion_rows(g);
  Membership m;
  m.scale = denominator_lcm(rows);
  m.width = 2 * (g.table().size() + 1) * g.dimension();
  IntMatrix a;
  for (const auto& r : rows) a.push_back(*scaled_integers(r, m.scale));
  m.hnf = hermite_normal_form(std::move(a), m.width);
  return m;
}

std::optional<std::vector<Integer>> coordinates_in(const Membership& m, const PeriodVector& v, std::size_t symbols) {
  auto iv = scaled_integers(v.rational_expansion(symbols), m.scale);
  if (!iv) return std::nullopt;
  return lattice_coordinates(m.hnf, std::move(*iv));
}

void require_compatible(const PeriodGroup& a, const PeriodGroup& b) {
  if (!(a.table() == b.table())) fail(ErrorCode::invalid_input, "period groups use different symbol tables");
  if (a.dimension() != b.dimension()) fail(ErrorCode::variable_mismatch, "period groups have different dimensions");
}

}  // namespace

PeriodGroup::PeriodGroup(SymbolTable table, std::size_t n, std::vector<PeriodVector> generators)
    : table_(std::move(table)), n_(n) {
  for (auto& v : generators) {
    if (v.dimension() != n) fail(ErrorCode::variable_mismatch, "generator dimension differs from the group's");
    (void)v.rational_expansion(table_.size());
    if (!v.is_zero()) gens_.push_back(std::move(v));
  }
  zrank_ = aatkit::zrank(*this);
  rdim_ = aatkit::rdim(*this);
}

bool PeriodGroup::contains(const PeriodVector& v) const {
  if (v.dimension() != n_) fail(ErrorCode::variable_mismatch, "vector dimension differs from the group's");
  if (v.is_zero()) return true;
  if (gens_.empty()) return false;
  return coordinates_in(membership_data(*this), v, table_.size()).has_value();
}

std::size_t zrank(const PeriodGroup& g) {
  if (g.generators().empty()) return 0;
  return rational_rank(expansion_rows(g));
}

std::size_t rdim(const PeriodGroup& g) {
  if (g.generators().empty()) return 0;
  const std::size_t s = g.table().size();
  const std::size_t n = g.dimension();
  // real and imaginary parts as linear polynomials in the symbols
  RingMatrix<Polynomial> a;
  for (const auto& v : g.generators()) {
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial re(s), im(s);
      for (const auto& [slot, x] : v.coords()[i]) {
        const MultiIndex m = slot == 0 ? MultiIndex(s) : MultiIndex::unit(s, slot - 1);
        re.add_term(m, ExactScalar(x.re()));
        im.add_term(m, ExactScalar(x.im()));
      }
      row.push_back(std::move(re));
      row.push_back(std::move(im));
    }
    a.push_back(std::move(row));
  }
  return bareiss_rank(std::move(a), 2 * n, Polynomial::constant(s, ExactScalar(1)));
}

PeriodGroup apply_gl(const ScalarMatrix& alpha, const PeriodGroup& g) {
  const std::size_t n = g.dimension();
  if (!is_square(alpha, n)) fail(ErrorCode::arity_mismatch, "alpha must be an n x n matrix");
  const ScalarMatrix inv = inverse(alpha);
  std::vector<PeriodVector> gens;
  for (const auto& v : g.generators()) {
    PeriodVector w(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (inv[i][j].is_zero()) continue;
        for (const auto& [slot, x] : v.coords()[j]) w.add(i, slot, inv[i][j] * x);
      }
    gens.push_back(std::move(w));
  }
  return PeriodGroup(g.table(), n, std::move(gens));
}

std::optional<unsigned> smallest_scaling_into(const PeriodGroup& src, const PeriodGroup& dst, unsigned n_max) {
  require_compatible(src, dst);
  if (src.generators().empty()) return n_max >= 1 ? std::optional<unsigned>(1) : std::nullopt;
  if (dst.generators().empty()) return std::nullopt;
  const Membership m = membership_data(dst);
  const std::size_t s = dst.table().size();
  for (unsigned N = 1; N <= n_max; ++N) {
    bool all = true;
    for (const auto& v : src.generators())
      if (!coordinates_in(m, v * ExactScalar(static_cast<long>(N)), s)) {
        all = false;
        break;
      }
    if (all) return N;
  }
  return std::nullopt;
}

std::string IndexResult::describe() const {
  switch (kind) {
    case finite: return index.get_str();
    case infinite: return "INFINITE";
    case not_contained: return "NOT_CONTAINED";
  }
  return "?";
}

IndexResult sublattice_index(const PeriodGroup& sub, const PeriodGroup& sup) {
  require_compatible(sub, sup);
  IndexResult r;
  const std::size_t s = sup.table().size();
  IntMatrix coords;
  if (!sub.generators().empty()) {
    if (sup.generators().empty()) return r;
    const Membership m = membership_data(sup);
    for (const auto& v : sub.generators()) {
      auto c = coordinates_in(m, v, s);
      if (!c) return r;
      coords.push_back(std::move(*c));
    }
  }
  if (sub.zrank() < sup.zrank()) {
    r.kind = IndexResult::infinite;
    return r;
  }
  r.kind = IndexResult::finite;
  r.index = 1;
  if (coords.empty()) return r;
  for (const auto& d : smith_invariants(coords, coords.front().size())) r.index *= d;
  return r;
}

RankComparison compare_rank_invariant(const PeriodGroup& gf, const PeriodGroup& gg) {
  return {gf.zrank() == gg.zrank(), gf.zrank(), gg.zrank()};
}

bool conjugation_closed(const PeriodGroup& g) {
  if (g.generators().empty()) return true;
  const Membership m = membership_data(g);
  for (const auto& v : g.generators())
    if (!coordinates_in(m, v.conj(), g.table().size())) return false;
  return true;
}

}  // namespace aatkit
