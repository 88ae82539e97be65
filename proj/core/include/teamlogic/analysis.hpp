#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "teamlogic/formula.hpp"

namespace teamlogic {

/// One step from a formula to a child occurrence.
enum class PathStep { Lhs, Rhs, Body };

/// Child selectors from a root formula to one subformula occurrence.
/// Distinguishes occurrences: `P(x) & P(x)` has two distinct paths to `P(x)`.
using SubformulaPath = std::vector<PathStep>;

/// The occurrence at `path`; throws UsageError when the path is invalid.
const Formula& subformula_at(const Formula& root, const SubformulaPath& path);

/// Variables over which the occurrence at `path` is evaluated when `sentence`
/// is evaluated at the root: empty at the root, unchanged through connectives,
/// extended by the bound variable through each quantifier. Listed in binding order.
VariableList subformula_scope(const Formula& sentence, const SubformulaPath& path);

/// Variables of a dependency atom whose constancy alone satisfies the atom:
/// the determined variable of dep, both sides of ind, everything in inc.
VariableList nonconditional_variables(const Formula& atom);

struct FragmentProfile {
  std::size_t universal_count = 0;
  std::size_t existential_count = 0;
  /// Longest dep condition; k for the k-dep fragment.
  std::size_t max_dep_condition_arity = 0;
  /// Distinct variables of the widest ind atom minus one; k for k-ind.
  std::size_t max_ind_distinct_vars = 0;
  /// Widest inclusion atom side; k for k-inc.
  std::size_t max_inc_width = 0;
  std::size_t dep_atoms = 0;
  std::size_t ind_atoms = 0;
  std::size_t inc_atoms = 0;
  /// No name bound twice and no bound name also free.
  bool quantified_exactly_once = true;
  bool is_sentence = true;

  /// Sentence, quantified exactly once, at most k universals.
  bool in_universal_fragment(std::size_t k) const {
    return is_sentence && quantified_exactly_once && universal_count <= k;
  }
};

FragmentProfile classify_fragment(const Formula& formula);

/// Key=value rendering, one field per line.
std::string to_string(const FragmentProfile& profile);

/// First identifier `base_0`, `base_1`, ... that is not in `avoid`.
Variable fresh_variable(const VariableSet& avoid, const std::string& base = "x");

/// Deterministic fresh-name source that remembers everything it handed out.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(VariableSet used) : used_(std::move(used)) {}

  void reserve(const Variable& name) { used_.insert(name); }
  void reserve_all(const Formula& formula);
  bool is_used(const Variable& name) const { return used_.count(name) != 0; }

  Variable fresh(const std::string& base = "x");

 private:
  VariableSet used_;
};

}  // namespace teamlogic
