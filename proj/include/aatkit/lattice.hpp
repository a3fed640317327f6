#pragma once

#include "aatkit/matrix.hpp"
#include "aatkit/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aatkit {

/// Named real constants assumed algebraically independent over Q.
class SymbolTable {
 public:
  struct Symbol {
    std::string name;
    std::optional<std::string> decimal;  // approximation for numeric checks
  };

  SymbolTable() = default;
  explicit SymbolTable(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  // Throws invalid_input for an unknown name.
  std::size_t require(const std::string& name) const;
  std::string assumption() const;

  friend bool operator==(const SymbolTable& a, const SymbolTable& b);

 private:
  std::vector<Symbol> symbols_;
};

inline constexpr const char* kUnitSymbol = "1";

/// Point of C^n with every coordinate a Q(i)-combination of the symbols and
/// the unit. Slot 0 of a coordinate is the unit, slot k+1 is symbol k.
class PeriodVector {
 public:
  using Coordinate = std::map<std::size_t, ExactScalar>;

  PeriodVector() = default;
  explicit PeriodVector(std::size_t n) : coords_(n) {}

  std::size_t dimension() const noexcept { return coords_.size(); }
  const std::vector<Coordinate>& coords() const noexcept { return coords_; }
  // Adds c * slot to coordinate i.
  void add(std::size_t i, std::size_t slot, const ExactScalar& c);
  bool is_zero() const;

  PeriodVector operator*(const ExactScalar& c) const;
  PeriodVector conj() const;
  friend bool operator==(const PeriodVector& a, const PeriodVector& b) { return a.coords_ == b.coords_; }

  // Expansion over the Q-basis {slot, i*slot} of every coordinate.
  std::vector<Rational> rational_expansion(std::size_t symbols) const;
  std::string to_string(const SymbolTable& table) const;

 private:
  std::vector<Coordinate> coords_;
};

/// Finitely generated subgroup of C^n.
class PeriodGroup {
 public:
  PeriodGroup() = default;
  // Zero generators are dropped; throws variable_mismatch on dimension clash.
  PeriodGroup(SymbolTable table, std::size_t n, std::vector<PeriodVector> generators);

  const SymbolTable& table() const noexcept { return table_; }
  std::size_t dimension() const noexcept { return n_; }
  const std::vector<PeriodVector>& generators() const noexcept { return gens_; }

  std::size_t zrank() const noexcept { return zrank_; }
  std::size_t rdim() const noexcept { return rdim_; }
  bool is_discrete() const noexcept { return zrank_ == rdim_; }
  bool is_lattice() const noexcept { return is_discrete() && zrank_ == 2 * n_; }

  // Exact membership in the generated Z-module.
  bool contains(const PeriodVector& v) const;

 private:
  SymbolTable table_;
  std::size_t n_ = 0;
  std::vector<PeriodVector> gens_;
  std::size_t zrank_ = 0;
  std::size_t rdim_ = 0;
};

std::size_t zrank(const PeriodGroup& g);
std::size_t rdim(const PeriodGroup& g);

/// alpha^-1 applied to every generator; throws singular_alpha.
PeriodGroup apply_gl(const ScalarMatrix& alpha, const PeriodGroup& g);

/// Smallest N <= n_max with N * src contained in dst.
std::optional<unsigned> smallest_scaling_into(const PeriodGroup& src, const PeriodGroup& dst, unsigned n_max);

struct IndexResult {
  enum Kind { finite, infinite, not_contained } kind = not_contained;
  Integer index{0};

  std::string describe() const;
};

IndexResult sublattice_index(const PeriodGroup& sub, const PeriodGroup& sup);

struct RankComparison {
  bool equal = false;
  std::size_t rank_f = 0;
  std::size_t rank_g = 0;
};

RankComparison compare_rank_invariant(const PeriodGroup& gf, const PeriodGroup& gg);

bool conjugation_closed(const PeriodGroup& g);

}  // namespace aatkit
