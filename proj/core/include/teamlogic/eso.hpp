#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/structure.hpp"

namespace teamlogic {

/// A first-order variable or an application f(t1..tn) of a quantified function symbol.
class Term {
 public:
  static Term variable(Variable name);
  static Term apply(std::string function, std::vector<Term> arguments);

  bool is_variable() const noexcept { return variable_; }
  /// Variable name or function symbol.
  const std::string& name() const noexcept { return name_; }
  const std::vector<Term>& arguments() const noexcept { return arguments_; }
  /// Nesting depth of applications; variables have depth 0.
  std::size_t depth() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend bool operator<(const Term& a, const Term& b);

 private:
  std::string name_;
  std::vector<Term> arguments_;
  bool variable_ = true;
};

enum class EsoKind { Atom, Equal, Not, And, Or, Implies };

/// Quantifier-free first-order matrix over Terms. Immutable, value semantics.
class EsoFormula {
 public:
  /// R(t1..tn) for a quantified relation or a relation of the structure.
  static EsoFormula atom(std::string relation, std::vector<Term> terms);
  static EsoFormula equal(Term lhs, Term rhs);
  static EsoFormula negation(EsoFormula body);
  static EsoFormula conj(EsoFormula lhs, EsoFormula rhs);
  static EsoFormula disj(EsoFormula lhs, EsoFormula rhs);
  static EsoFormula implies(EsoFormula lhs, EsoFormula rhs);
  /// Left-folded conjunction; `parts` must be nonempty.
  static EsoFormula conj_all(const std::vector<EsoFormula>& parts);

  EsoKind kind() const noexcept { return node_->kind; }
  const std::string& relation() const noexcept { return node_->relation; }
  /// Atom arguments, or the two sides of an equality.
  const std::vector<Term>& terms() const noexcept { return node_->terms; }
  const std::vector<EsoFormula>& children() const noexcept { return node_->children; }

  friend bool operator==(const EsoFormula& a, const EsoFormula& b);

 private:
  struct Node {
    EsoKind kind;
    std::string relation;
    std::vector<Term> terms;
    std::vector<EsoFormula> children;
  };
  explicit EsoFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct SymbolDecl {
  std::string name;
  std::size_t arity = 0;
  friend bool operator==(const SymbolDecl&, const SymbolDecl&) = default;
};

/// Skolem-form sentence: exists functions and relations, forall universals, matrix.
struct EsoSentence {
  std::vector<SymbolDecl> functions;
  std::vector<SymbolDecl> relations;
  VariableList universals;
  EsoFormula matrix;

  /// Number of universal variables.
  std::size_t rank() const noexcept { return universals.size(); }
  const SymbolDecl* find_function(std::string_view name) const;
  const SymbolDecl* find_relation(std::string_view name) const;
};

/// Text format: `exists f/1 relation S/2 . forall x y . <matrix>`; both prefixes optional.
EsoSentence parse_eso(std::string_view text);

/// Throws UsageError on undeclared symbols, arity mismatches, duplicate
/// declarations or variables outside the universal prefix.
void validate_eso(const EsoSentence& sentence);

std::string to_string(const Term& term);
std::string to_string(const EsoFormula& formula);
std::string to_string(const EsoSentence& sentence);
std::ostream& operator<<(std::ostream& out, const EsoSentence& sentence);

/// Interpretation found by a successful search. Tables are indexed by the
/// base-|M| number of the argument tuple, most significant argument first.
struct EsoWitness {
  std::map<std::string, std::vector<Element>> functions;
  std::map<std::string, std::vector<bool>> relations;
};

struct EsoResult {
  bool verdict = false;
  std::uint64_t steps = 0;
  EsoWitness witness;
};

/// Truth of the sentence in M by search over interpretations of the quantified
/// symbols. `max_witness_functions` bounds the number of assigned table cells.
EsoResult evaluate_eso_detailed(const Structure& structure, const EsoSentence& sentence,
                                const EvalLimits& limits = {});
bool evaluate_eso(const Structure& structure, const EsoSentence& sentence,
                  const EvalLimits& limits = {});

/// Tarski truth of the matrix under a fixed interpretation, for every universal assignment.
bool eso_holds_under(const Structure& structure, const EsoSentence& sentence,
                     const EsoWitness& interpretation);

struct FoToEsoOptions {
  /// Translate maximal first-order subformulas as one guarded clause instead of
  /// splitting their connectives with fresh relations.
  bool collapse_first_order = true;
};

/// Compiles a sentence forall x1..xk exists y1..ym chi (chi quantifier-free,
/// independence atoms of the form ind(u; z; w) with single z and w).
EsoSentence fo_to_eso(const Formula& sentence, const FoToEsoOptions& options = {});
/// prenex normal form, independence contraction, then fo_to_eso.
EsoSentence sentence_to_eso(const Formula& sentence, const FoToEsoOptions& options = {});

struct DurandSymbol {
  std::string name;
  std::size_t arity = 0;
  /// Distinct composed terms with this symbol outermost.
  std::size_t composed_count = 0;
  bool has_flat_occurrence = false;
  bool is_inner = false;
  bool is_outer = false;
  bool arity_equals_k = false;
};

struct DurandProfile {
  std::size_t k = 0;
  std::vector<DurandSymbol> symbols;
  std::vector<std::string> diagnostics;
  bool valid = false;

  const DurandSymbol* find(std::string_view name) const;
};

/// Checks the function-occurrence normal form expected by eso_to_inclusion.
DurandProfile validate_durand_form(const EsoSentence& sentence);
std::string to_string(const DurandProfile& profile);

/// forall x1..xk exists y_f.. exists z_f_j.. (psi* & inclusion atoms). Throws
/// UsageError unless the profile is valid.
Formula eso_to_inclusion(const EsoSentence& sentence, const DurandProfile& profile);
Formula eso_to_inclusion(const EsoSentence& sentence);

}  // namespace teamlogic
