#pragma once

#include <map>

#include "teamlogic/formula.hpp"

namespace teamlogic {

/// Replaces every occurrence of `from`, bound or free, by `to`.
/// Throws UsageError if `to` already occurs in the formula.
Formula rename_variable(const Formula& formula, const Variable& from, const Variable& to);

/// Simultaneous renaming of every occurrence. No capture check.
Formula substitute_variables(const Formula& formula, const std::map<Variable, Variable>& renaming);

/// rel_x̄: prefixes the condition of every dependency atom by `prefix`;
/// inclusion atoms get `prefix` on both sides. First-order parts are unchanged.
Formula relativize(const VariableList& prefix, const Formula& formula);

/// Rewrites independence atoms until both sides have at most one variable:
///   ind(x̄; ȳ v; z̄) becomes ind(x̄ v; ȳ; z̄) & ind(x̄; v; z̄),
///   ind(x̄; ȳ; z̄ w) becomes ind(x̄ w; ȳ; z̄) & ind(x̄; ȳ; w).
Formula contract_independence(const Formula& formula);

/// dep(ū; v) becomes ind(ū; v; v).
Formula dep_to_independence(const Formula& formula);

/// Renames bound variables so that no name is bound twice or bound and free.
/// Names already quantified exactly once are kept.
Formula normalize_variables(const Formula& formula);

/// Rebuilds a formula bottom-up, replacing each atom or literal by `leaf(atom)`.
template <typename Leaf>
Formula map_leaves(const Formula& f, Leaf&& leaf) {
  switch (f.kind()) {
    case FormulaKind::And:
      return Formula::conj(map_leaves(f.lhs(), leaf), map_leaves(f.rhs(), leaf));
    case FormulaKind::Or:
      return Formula::disj(map_leaves(f.lhs(), leaf), map_leaves(f.rhs(), leaf));
    case FormulaKind::Exists:
      return Formula::exists(f.bound(), map_leaves(f.body(), leaf));
    case FormulaKind::Forall:
      return Formula::forall(f.bound(), map_leaves(f.body(), leaf));
    default:
      return leaf(f);
  }
}

}  // namespace teamlogic
