#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhwb/algebra.hpp"
#include "hhwb/quiver.hpp"

namespace hhwb {

/// lhs -> rhs, where every path of rhs is parallel to lhs and strictly
/// smaller in the length-lexicographic order.
struct Rule {
  Path lhs;
  LinComb rhs;
};

/// Path rewriting system presenting kQ / I. Paths compose left to right.
class RewritingSystem {
 public:
  RewritingSystem(FieldSpec field, Quiver quiver, std::vector<Rule> rules);
  /// Orients each relation (a linear combination that is set to zero) by
  /// its largest path.
  static RewritingSystem from_relations(FieldSpec field, Quiver quiver,
                                        const std::vector<LinComb>& relations);

  const FieldSpec& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Rule>& rules() const { return rules_; }

  bool is_reducible(const Path& p) const;
  LinComb normal_form(const LinComb& c) const;
  LinComb normal_form(const Path& p) const;
  /// Human-readable rule, e.g. "eps*eps -> eps".
  std::string describe(const Rule& r) const;

 private:
  FieldSpec field_;
  Quiver quiver_;
  std::vector<Rule> rules_;
};

/// Length cap used when the caller does not supply one:
/// 2 * (number of arrows + total relation length).
std::size_t default_cap(const RewritingSystem& rs);

/// Bounded Knuth-Bendix completion. Resolves every overlap ambiguity whose
/// overlap word has length <= degree_cap, adding and inter-reducing rules.
/// Throws InconclusiveConfluence if an overlap beyond the cap still fails
/// to resolve.
RewritingSystem complete(const RewritingSystem& rs, std::size_t degree_cap);

/// Describes the first overlap ambiguity that does not resolve, if any.
std::optional<std::string> find_unresolved_overlap(const RewritingSystem& rs);

/// kQ / I with the irreducible paths as basis. Throws NotFiniteWithinCap
/// when an irreducible path of length `length_cap` exists, and
/// PreconditionError when the system is not confluent.
FdAlgebra enumerate_basis(const RewritingSystem& rs, std::size_t length_cap);

/// Irreducible paths in basis order (same order as enumerate_basis).
std::vector<Path> irreducible_paths(const RewritingSystem& rs, std::size_t length_cap);

/// Every rule has rhs = 0.
bool is_monomial(const RewritingSystem& rs);

}  // namespace hhwb
