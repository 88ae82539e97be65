#include "teamlogic/analysis.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "teamlogic/error.hpp"

namespace teamlogic {

const Formula& subformula_at(const Formula& root, const SubformulaPath& path) {
  const Formula* cur = &root;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const PathStep step = path[i];
    if (step == PathStep::Body && cur->is_quantifier()) {
      cur = &cur->body();
    } else if (step != PathStep::Body && cur->is_connective()) {
      cur = step == PathStep::Lhs ? &cur->lhs() : &cur->rhs();
    } else {
      throw UsageError("invalid subformula path at step " + std::to_string(i));
    }
  }
  return *cur;
}

VariableList subformula_scope(const Formula& sentence, const SubformulaPath& path) {
  VariableList scope;
  const Formula* cur = &sentence;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const PathStep step = path[i];
    if (step == PathStep::Body && cur->is_quantifier()) {
      if (std::find(scope.begin(), scope.end(), cur->bound()) == scope.end()) {
        scope.push_back(cur->bound());
      }
      cur = &cur->body();
    } else if (step != PathStep::Body && cur->is_connective()) {
      cur = step == PathStep::Lhs ? &cur->lhs() : &cur->rhs();
    } else {
      throw UsageError("invalid subformula path at step " + std::to_string(i));
    }
  }
  return scope;
}

VariableList nonconditional_variables(const Formula& atom) {
  VariableList out;
  auto add = [&](const VariableList& vars) {
    for (const auto& v : vars) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  };
  switch (atom.kind()) {
    case FormulaKind::Dep:
      add({atom.determined()});
      break;
    case FormulaKind::Ind:
    case FormulaKind::Inc:
      add(atom.left_vars());
      add(atom.right_vars());
      break;
    default:
      throw UsageError("nonconditional_variables needs a dep, ind or inc atom, got " +
                       to_string(atom));
  }
  return out;
}

namespace {

void profile_walk(const Formula& f, FragmentProfile& p, std::map<Variable, int>& binders) {
  switch (f.kind()) {
    case FormulaKind::Literal:
      break;
    case FormulaKind::Dep:
      ++p.dep_atoms;
      p.max_dep_condition_arity = std::max(p.max_dep_condition_arity, f.condition().size());
      break;
    case FormulaKind::Ind: {
      ++p.ind_atoms;
      VariableSet distinct(f.condition().begin(), f.condition().end());
      distinct.insert(f.left_vars().begin(), f.left_vars().end());
      distinct.insert(f.right_vars().begin(), f.right_vars().end());
      const std::size_t k = distinct.empty() ? 0 : distinct.size() - 1;
      p.max_ind_distinct_vars = std::max(p.max_ind_distinct_vars, k);
      break;
    }
    case FormulaKind::Inc:
      ++p.inc_atoms;
      p.max_inc_width = std::max(p.max_inc_width, f.left_vars().size());
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
      profile_walk(f.lhs(), p, binders);
      profile_walk(f.rhs(), p, binders);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      if (f.kind() == FormulaKind::Forall) {
        ++p.universal_count;
      } else {
        ++p.existential_count;
      }
      ++binders[f.bound()];
      profile_walk(f.body(), p, binders);
      break;
  }
}

}  // namespace

FragmentProfile classify_fragment(const Formula& formula) {
  FragmentProfile p;
  std::map<Variable, int> binders;
  profile_walk(formula, p, binders);
  const VariableSet free = free_variables(formula);
  p.is_sentence = free.empty();
  for (const auto& [name, count] : binders) {
    if (count > 1 || free.count(name)) p.quantified_exactly_once = false;
  }
  return p;
}

std::string to_string(const FragmentProfile& p) {
  std::ostringstream out;
  out << "universal_count=" << p.universal_count << '\n'
      << "existential_count=" << p.existential_count << '\n'
      << "max_dep_condition_arity=" << p.max_dep_condition_arity << '\n'
      << "max_ind_distinct_vars=" << p.max_ind_distinct_vars << '\n'
      << "max_inc_width=" << p.max_inc_width << '\n'
      << "dep_atoms=" << p.dep_atoms << '\n'
      << "ind_atoms=" << p.ind_atoms << '\n'
      << "inc_atoms=" << p.inc_atoms << '\n'
      << "quantified_exactly_once=" << (p.quantified_exactly_once ? "true" : "false") << '\n'
      << "is_sentence=" << (p.is_sentence ? "true" : "false") << '\n';
  return out.str();
}

Variable fresh_variable(const VariableSet& avoid, const std::string& base) {
  for (std::size_t i = 0;; ++i) {
    Variable candidate = base + "_" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

void NameSupply::reserve_all(const Formula& formula) {
  for (auto& v : formula.all_variables()) used_.insert(std::move(v));
}

Variable NameSupply::fresh(const std::string& base) {
  Variable v = fresh_variable(used_, base);
  used_.insert(v);
  return v;
}

}  // namespace teamlogic
