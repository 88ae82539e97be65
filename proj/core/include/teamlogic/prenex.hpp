#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teamlogic/formula.hpp"

namespace teamlogic {

/// ∀x1..xm ∃y1..yn (χ ∧ θ) with χ a conjunction of dependency atoms and θ
/// quantifier-free first-order. Either part may be absent, not both.
struct PrenexSentence {
  VariableList universals;
  VariableList existentials;
  std::vector<Formula> chi;
  std::optional<Formula> theta;

  Formula matrix() const;
  Formula to_formula() const;
};

struct PrenexOptions {
  /// Rename re-used bound variables first instead of rejecting the input.
  bool normalize_variables = false;
};

/// Strict-semantics prenex normal form of a sentence of FO(dep, ind, inc).
/// Throws UsageError for non-sentences and for re-used bound variables
/// unless normalization is enabled.
PrenexSentence to_prenex_normal_form(const Formula& sentence, const PrenexOptions& options = {});

/// Shape problems of a prenex sentence; empty when every invariant holds:
/// χ holds only dependency atoms, θ is quantifier-free first-order, every
/// non-conditional variable of χ is existential, no name is quantified twice,
/// and the sentence is closed.
std::vector<std::string> prenex_violations(const PrenexSentence& prenex);

std::string to_string(const PrenexSentence& prenex);

}  // namespace teamlogic
