#include "teamlogic/tarski.hpp"

#include "teamlogic/error.hpp"

namespace teamlogic {

Bindings::Bindings(const Structure& structure, const Assignment& assignment) : structure_(&structure) {
  for (const auto& [v, e] : assignment.entries()) stack_.emplace_back(v, e);
}

Bindings::Bindings(const Structure& structure, const Team& team, std::size_t row) : structure_(&structure) {
  const auto& vars = team.vars();
  const auto& values = team.rows()[row];
  for (std::size_t i = 0; i < vars.size(); ++i) stack_.emplace_back(vars[i], values[i]);
}

Element Bindings::lookup(std::string_view var) const {
  for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
    if (it->first == var) return it->second;
  }
  if (auto c = structure_->constant(std::string(var))) return *c;
  throw UsageError("variable " + std::string(var) + " is unbound");
}

bool literal_holds(const Structure& structure, const Formula& literal, const Bindings& bindings) {
  const auto& args = literal.arguments();
  bool value;
  if (literal.is_equality()) {
    value = bindings.lookup(args[0]) == bindings.lookup(args[1]);
  } else {
    Element buf[8];
    std::vector<Element> heap;
    std::span<Element> tuple;
    if (args.size() <= 8) {
      tuple = std::span<Element>(buf, args.size());
    } else {
      heap.resize(args.size());
      tuple = heap;
    }
    for (std::size_t i = 0; i < args.size(); ++i) tuple[i] = bindings.lookup(args[i]);
    value = structure.holds(literal.predicate(), tuple);
  }
  return value == literal.positive();
}

bool tarski_holds(const Structure& structure, const Formula& f, Bindings& bindings) {
  switch (f.kind()) {
    case FormulaKind::Literal:
      return literal_holds(structure, f, bindings);
    case FormulaKind::And:
      return tarski_holds(structure, f.lhs(), bindings) && tarski_holds(structure, f.rhs(), bindings);
    case FormulaKind::Or:
      return tarski_holds(structure, f.lhs(), bindings) || tarski_holds(structure, f.rhs(), bindings);
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      const bool universal = f.kind() == FormulaKind::Forall;
      for (Element m = 0; m < structure.size(); ++m) {
        bindings.push(f.bound(), m);
        const bool holds = tarski_holds(structure, f.body(), bindings);
        bindings.pop();
        if (holds != universal) return holds;
      }
      return universal;
    }
    default:
      throw UsageError("first-order evaluation of a formula with dependency atom " + to_string(f));
  }
}

bool tarski_holds(const Structure& structure, const Formula& formula, const Assignment& assignment) {
  Bindings b(structure, assignment);
  return tarski_holds(structure, formula, b);
}

}  // namespace teamlogic
