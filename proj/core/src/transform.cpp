#include "teamlogic/transform.hpp"

#include <algorithm>

#include "teamlogic/analysis.hpp"
#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

VariableList mapped(const VariableList& vars, const std::map<Variable, Variable>& renaming) {
  VariableList out;
  out.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = renaming.find(v);
    out.push_back(it == renaming.end() ? v : it->second);
  }
  return out;
}

VariableList concat(VariableList a, const VariableList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Formula contract_atom(const Formula& atom) {
  const auto& cond = atom.condition();
  const auto& left = atom.left_vars();
  const auto& right = atom.right_vars();
  if (left.size() >= 2) {
    const Variable& v = left.back();
    const VariableList rest(left.begin(), left.end() - 1);
    return Formula::conj(contract_atom(Formula::ind(concat(cond, {v}), rest, right)),
                         contract_atom(Formula::ind(cond, {v}, right)));
  }
  if (right.size() >= 2) {
    const Variable& w = right.back();
    const VariableList rest(right.begin(), right.end() - 1);
    return Formula::conj(contract_atom(Formula::ind(concat(cond, {w}), left, rest)),
                         contract_atom(Formula::ind(cond, left, {w})));
  }
  return atom;
}

}  // namespace

Formula substitute_variables(const Formula& f, const std::map<Variable, Variable>& renaming) {
  auto one = [&](const Variable& v) {
    auto it = renaming.find(v);
    return it == renaming.end() ? v : it->second;
  };
  switch (f.kind()) {
    case FormulaKind::Literal:
      return Formula::literal(f.positive(), f.predicate(), mapped(f.arguments(), renaming));
    case FormulaKind::Dep:
      return Formula::dep(mapped(f.condition(), renaming), one(f.determined()));
    case FormulaKind::Ind:
      return Formula::ind(mapped(f.condition(), renaming), mapped(f.left_vars(), renaming),
                          mapped(f.right_vars(), renaming));
    case FormulaKind::Inc:
      return Formula::inc(mapped(f.left_vars(), renaming), mapped(f.right_vars(), renaming));
    case FormulaKind::And:
      return Formula::conj(substitute_variables(f.lhs(), renaming), substitute_variables(f.rhs(), renaming));
    case FormulaKind::Or:
      return Formula::disj(substitute_variables(f.lhs(), renaming), substitute_variables(f.rhs(), renaming));
    case FormulaKind::Exists:
      return Formula::exists(one(f.bound()), substitute_variables(f.body(), renaming));
    case FormulaKind::Forall:
      return Formula::forall(one(f.bound()), substitute_variables(f.body(), renaming));
  }
  return f;
}

Formula rename_variable(const Formula& formula, const Variable& from, const Variable& to) {
  if (from == to) return formula;
  const auto vars = formula.all_variables();
  if (std::find(vars.begin(), vars.end(), to) != vars.end()) {
    throw UsageError("cannot rename " + from + " to " + to + ": " + to + " already occurs");
  }
  return substitute_variables(formula, {{from, to}});
}

Formula relativize(const VariableList& prefix, const Formula& formula) {
  return map_leaves(formula, [&](const Formula& a) {
    switch (a.kind()) {
      case FormulaKind::Dep:
        return Formula::dep(concat(prefix, a.condition()), a.determined());
      case FormulaKind::Ind:
        return Formula::ind(concat(prefix, a.condition()), a.left_vars(), a.right_vars());
      case FormulaKind::Inc:
        return Formula::inc(concat(prefix, a.left_vars()), concat(prefix, a.right_vars()));
      default:
        return a;
    }
  });
}

Formula contract_independence(const Formula& formula) {
  return map_leaves(formula, [](const Formula& a) { return a.kind() == FormulaKind::Ind ? contract_atom(a) : a; });
}

Formula dep_to_independence(const Formula& formula) {
  return map_leaves(formula, [](const Formula& a) {
    return a.kind() == FormulaKind::Dep ? Formula::ind(a.condition(), {a.determined()}, {a.determined()}) : a;
  });
}

namespace {

Formula normalize(const Formula& f, const std::map<Variable, Variable>& env, VariableSet& bound, NameSupply& names) {
  if (!f.is_quantifier()) {
    if (!f.is_connective()) return substitute_variables(f, env);
    Formula l = normalize(f.lhs(), env, bound, names);
    Formula r = normalize(f.rhs(), env, bound, names);
    return f.kind() == FormulaKind::And ? Formula::conj(l, r) : Formula::disj(l, r);
  }
  const Variable& v = f.bound();
  Variable name = v;
  if (bound.count(v)) name = names.fresh(v);
  bound.insert(name);
  auto inner = env;
  inner[v] = name;
  Formula body = normalize(f.body(), inner, bound, names);
  return f.kind() == FormulaKind::Exists ? Formula::exists(name, body) : Formula::forall(name, body);
}

}  // namespace

Formula normalize_variables(const Formula& formula) {
  NameSupply names;
  names.reserve_all(formula);
  const auto free = free_variables(formula);
  VariableSet bound(free.begin(), free.end());
  return normalize(formula, {}, bound, names);
}

}  // namespace teamlogic
