#pragma once

#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace teamlogic {

using Variable = std::string;
using VariableList = std::vector<Variable>;
using VariableSet = std::set<Variable>;

/// Predicate name used for equality literals `x = y` / `x != y`.
inline constexpr const char* kEqualityPredicate = "=";

enum class FormulaKind { Literal, Dep, Ind, Inc, And, Or, Exists, Forall };

namespace detail {
struct FormulaNode;
}

/// Immutable formula of FO(dep, ind, inc) in negation normal form.
///
/// Nodes are shared, so copies are cheap and the type has value semantics:
/// two formulas compare equal iff their trees are structurally identical.
/// Negation only occurs on first-order literals.
class Formula {
 public:
  static Formula literal(bool positive, std::string predicate, VariableList arguments);
  static Formula equality(Variable lhs, Variable rhs, bool positive = true);
  /// dep(condition; determined). An empty condition is the constancy atom.
  static Formula dep(VariableList condition, Variable determined);
  /// ind(condition; left; right): left is independent of right given condition.
  static Formula ind(VariableList condition, VariableList left, VariableList right);
  /// inc(left; right): X(left) is a subset of X(right). Widths must agree.
  static Formula inc(VariableList left, VariableList right);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula exists(Variable bound, Formula body);
  static Formula forall(Variable bound, Formula body);

  /// Left-folded conjunction; `parts` must be nonempty.
  static Formula conj_all(const std::vector<Formula>& parts);
  static Formula disj_all(const std::vector<Formula>& parts);

  FormulaKind kind() const;

  bool is_literal() const { return kind() == FormulaKind::Literal; }
  /// True for dep, ind and inc atoms.
  bool is_dependency_atom() const;
  bool is_quantifier() const;
  bool is_connective() const;

  // Literal.
  bool positive() const;
  const std::string& predicate() const;
  const VariableList& arguments() const;
  bool is_equality() const;

  // Dep / Ind atoms.
  const VariableList& condition() const;
  const Variable& determined() const;
  // Ind / Inc atoms.
  const VariableList& left_vars() const;
  const VariableList& right_vars() const;

  // And / Or.
  const Formula& lhs() const;
  const Formula& rhs() const;

  // Exists / Forall.
  const Variable& bound() const;
  const Formula& body() const;

  /// Every variable occurring in the formula, bound or free, in first-occurrence order.
  VariableList all_variables() const;

  /// Identity of the shared node; equal ids imply equal formulas.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}
  const detail::FormulaNode& node() const { return *node_; }

  std::shared_ptr<const detail::FormulaNode> node_;
};

namespace detail {
struct FormulaNode {
  FormulaKind kind;
  bool positive = true;
  std::string name;  // predicate, bound variable, or determined variable
  VariableList first;   // literal args / condition / inc left
  VariableList second;  // ind left / inc right
  VariableList third;   // ind right
  std::vector<Formula> children;
};
}  // namespace detail

/// Free variables; every variable of a dependency atom is a free occurrence.
VariableSet free_variables(const Formula& formula);

/// Does the formula contain no dep/ind/inc atoms?
bool is_first_order(const Formula& formula);
bool is_quantifier_free(const Formula& formula);
/// Are all dependency atoms dep atoms?
bool is_dependence_only(const Formula& formula);

/// Print in the concrete grammar accepted by parse_formula.
std::string to_string(const Formula& formula);
std::ostream& operator<<(std::ostream& out, const Formula& formula);

}  // namespace teamlogic
