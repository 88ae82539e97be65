#include "teamlogic/formula.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

using detail::FormulaNode;

std::shared_ptr<const FormulaNode> make_node(FormulaNode node) {
  return std::make_shared<const FormulaNode>(std::move(node));
}

void require(bool condition, const char* what) {
  if (!condition) throw UsageError(std::string("formula accessor misuse: ") + what);
}

void append_unique(VariableList& out, const VariableList& vars) {
  for (const auto& v : vars) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
}

void collect_variables(const Formula& f, VariableList& out) {
  switch (f.kind()) {
    case FormulaKind::Literal:
      append_unique(out, f.arguments());
      break;
    case FormulaKind::Dep:
      append_unique(out, f.condition());
      append_unique(out, {f.determined()});
      break;
    case FormulaKind::Ind:
      append_unique(out, f.condition());
      append_unique(out, f.left_vars());
      append_unique(out, f.right_vars());
      break;
    case FormulaKind::Inc:
      append_unique(out, f.left_vars());
      append_unique(out, f.right_vars());
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
      collect_variables(f.lhs(), out);
      collect_variables(f.rhs(), out);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      append_unique(out, {f.bound()});
      collect_variables(f.body(), out);
      break;
  }
}

void collect_free(const Formula& f, VariableSet& bound, VariableSet& out) {
  auto add = [&](const VariableList& vars) {
    for (const auto& v : vars) {
      if (!bound.count(v)) out.insert(v);
    }
  };
  switch (f.kind()) {
    case FormulaKind::Literal:
      add(f.arguments());
      break;
    case FormulaKind::Dep:
      add(f.condition());
      add({f.determined()});
      break;
    case FormulaKind::Ind:
      add(f.condition());
      add(f.left_vars());
      add(f.right_vars());
      break;
    case FormulaKind::Inc:
      add(f.left_vars());
      add(f.right_vars());
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      const bool fresh = bound.insert(f.bound()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.bound());
      break;
    }
  }
}

void print_list(std::ostream& out, const VariableList& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out << ' ';
    out << vars[i];
  }
}

void print(std::ostream& out, const Formula& f);

void print_wrapped(std::ostream& out, const Formula& f, bool wrap) {
  if (wrap) out << '(';
  print(out, f);
  if (wrap) out << ')';
}

void print(std::ostream& out, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Literal:
      if (f.is_equality()) {
        out << f.arguments()[0] << (f.positive() ? " = " : " != ") << f.arguments()[1];
      } else {
        if (!f.positive()) out << '!';
        out << f.predicate() << '(';
        print_list(out, f.arguments());
        out << ')';
      }
      break;
    case FormulaKind::Dep:
      out << "dep(";
      print_list(out, f.condition());
      out << "; " << f.determined() << ')';
      break;
    case FormulaKind::Ind:
      out << "ind(";
      print_list(out, f.condition());
      out << "; ";
      print_list(out, f.left_vars());
      out << "; ";
      print_list(out, f.right_vars());
      out << ')';
      break;
    case FormulaKind::Inc:
      out << "inc(";
      print_list(out, f.left_vars());
      out << "; ";
      print_list(out, f.right_vars());
      out << ')';
      break;
    case FormulaKind::And:
      print_wrapped(out, f.lhs(), f.lhs().kind() == FormulaKind::Or);
      out << " & ";
      print_wrapped(out, f.rhs(), f.rhs().is_connective());
      break;
    case FormulaKind::Or:
      print(out, f.lhs());
      out << " | ";
      print_wrapped(out, f.rhs(), f.rhs().kind() == FormulaKind::Or);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out << (f.kind() == FormulaKind::Exists ? "E " : "A ") << f.bound() << ". ";
      print_wrapped(out, f.body(), f.body().is_connective());
      break;
  }
}

}  // namespace

Formula Formula::literal(bool positive, std::string predicate, VariableList arguments) {
  if (predicate == kEqualityPredicate && arguments.size() != 2) {
    throw UsageError("equality literal needs exactly two arguments");
  }
  FormulaNode n{FormulaKind::Literal};
  n.positive = positive;
  n.name = std::move(predicate);
  n.first = std::move(arguments);
  return Formula(make_node(std::move(n)));
}

Formula Formula::equality(Variable lhs, Variable rhs, bool positive) {
  return literal(positive, kEqualityPredicate, {std::move(lhs), std::move(rhs)});
}

Formula Formula::dep(VariableList condition, Variable determined) {
  FormulaNode n{FormulaKind::Dep};
  n.first = std::move(condition);
  n.name = std::move(determined);
  return Formula(make_node(std::move(n)));
}

Formula Formula::ind(VariableList condition, VariableList left, VariableList right) {
  FormulaNode n{FormulaKind::Ind};
  n.first = std::move(condition);
  n.second = std::move(left);
  n.third = std::move(right);
  return Formula(make_node(std::move(n)));
}

Formula Formula::inc(VariableList left, VariableList right) {
  if (left.size() != right.size()) {
    throw UsageError("inclusion atom sides differ in width: " + std::to_string(left.size()) +
                     " vs " + std::to_string(right.size()));
  }
  FormulaNode n{FormulaKind::Inc};
  n.first = std::move(left);
  n.second = std::move(right);
  return Formula(make_node(std::move(n)));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  FormulaNode n{FormulaKind::And};
  n.children = {std::move(lhs), std::move(rhs)};
  return Formula(make_node(std::move(n)));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  FormulaNode n{FormulaKind::Or};
  n.children = {std::move(lhs), std::move(rhs)};
  return Formula(make_node(std::move(n)));
}

Formula Formula::exists(Variable bound, Formula body) {
  FormulaNode n{FormulaKind::Exists};
  n.name = std::move(bound);
  n.children = {std::move(body)};
  return Formula(make_node(std::move(n)));
}

Formula Formula::forall(Variable bound, Formula body) {
  FormulaNode n{FormulaKind::Forall};
  n.name = std::move(bound);
  n.children = {std::move(body)};
  return Formula(make_node(std::move(n)));
}

Formula Formula::conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) throw UsageError("empty conjunction");
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conj(out, parts[i]);
  return out;
}

Formula Formula::disj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) throw UsageError("empty disjunction");
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = disj(out, parts[i]);
  return out;
}

FormulaKind Formula::kind() const { return node().kind; }

bool Formula::is_dependency_atom() const {
  const auto k = kind();
  return k == FormulaKind::Dep || k == FormulaKind::Ind || k == FormulaKind::Inc;
}

bool Formula::is_quantifier() const {
  return kind() == FormulaKind::Exists || kind() == FormulaKind::Forall;
}

bool Formula::is_connective() const {
  return kind() == FormulaKind::And || kind() == FormulaKind::Or;
}

bool Formula::positive() const {
  require(is_literal(), "positive() on non-literal");
  return node().positive;
}

const std::string& Formula::predicate() const {
  require(is_literal(), "predicate() on non-literal");
  return node().name;
}

const VariableList& Formula::arguments() const {
  require(is_literal(), "arguments() on non-literal");
  return node().first;
}

bool Formula::is_equality() const { return is_literal() && node().name == kEqualityPredicate; }

const VariableList& Formula::condition() const {
  require(kind() == FormulaKind::Dep || kind() == FormulaKind::Ind, "condition()");
  return node().first;
}

const Variable& Formula::determined() const {
  require(kind() == FormulaKind::Dep, "determined() on non-dep");
  return node().name;
}

const VariableList& Formula::left_vars() const {
  require(kind() == FormulaKind::Ind || kind() == FormulaKind::Inc, "left_vars()");
  return kind() == FormulaKind::Ind ? node().second : node().first;
}

const VariableList& Formula::right_vars() const {
  require(kind() == FormulaKind::Ind || kind() == FormulaKind::Inc, "right_vars()");
  return kind() == FormulaKind::Ind ? node().third : node().second;
}

const Formula& Formula::lhs() const {
  require(is_connective(), "lhs() on non-connective");
  return node().children[0];
}

const Formula& Formula::rhs() const {
  require(is_connective(), "rhs() on non-connective");
  return node().children[1];
}

const Variable& Formula::bound() const {
  require(is_quantifier(), "bound() on non-quantifier");
  return node().name;
}

const Formula& Formula::body() const {
  require(is_quantifier(), "body() on non-quantifier");
  return node().children[0];
}

VariableList Formula::all_variables() const {
  VariableList out;
  collect_variables(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  return x.kind == y.kind && x.positive == y.positive && x.name == y.name &&
         x.first == y.first && x.second == y.second && x.third == y.third &&
         x.children == y.children;
}

VariableSet free_variables(const Formula& formula) {
  VariableSet bound;
  VariableSet out;
  collect_free(formula, bound, out);
  return out;
}

bool is_first_order(const Formula& f) {
  if (f.is_dependency_atom()) return false;
  if (f.is_connective()) return is_first_order(f.lhs()) && is_first_order(f.rhs());
  if (f.is_quantifier()) return is_first_order(f.body());
  return true;
}

bool is_quantifier_free(const Formula& f) {
  if (f.is_quantifier()) return false;
  if (f.is_connective()) return is_quantifier_free(f.lhs()) && is_quantifier_free(f.rhs());
  return true;
}

bool is_dependence_only(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Ind:
    case FormulaKind::Inc:
      return false;
    case FormulaKind::And:
    case FormulaKind::Or:
      return is_dependence_only(f.lhs()) && is_dependence_only(f.rhs());
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return is_dependence_only(f.body());
    default:
      return true;
  }
}

std::string to_string(const Formula& formula) {
  std::ostringstream out;
  print(out, formula);
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const Formula& formula) {
  print(out, formula);
  return out;
}

}  // namespace teamlogic
