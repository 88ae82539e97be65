#include "teamlogic/corpus.hpp"

#include <algorithm>

#include "teamlogic/error.hpp"

namespace teamlogic {

CorpusGenerator::CorpusGenerator(CorpusSpec spec) : spec_(std::move(spec)), rng_(spec_.seed) {
  if (spec_.free_variables.empty() && spec_.max_depth == 0 && spec_.shape == CorpusShape::Free)
    throw UsageError("a sentence corpus needs depth at least 1");
  if (spec_.free_variables.empty() && std::min(spec_.max_variables, spec_.max_universals + spec_.max_existentials) == 0)
    throw UsageError("corpus spec allows no variables");
}

Formula CorpusGenerator::next() {
  Budget budget;
  budget.variables = spec_.free_variables.size();
  if (spec_.shape == CorpusShape::ForallExists) return forall_exists(budget);
  return free_formula(spec_.max_depth, spec_.free_variables, budget);
}

Variable CorpusGenerator::fresh(Budget& budget) {
  for (;;) {
    Variable v = "x" + std::to_string(budget.counter++);
    if (std::find(spec_.free_variables.begin(), spec_.free_variables.end(), v) == spec_.free_variables.end()) {
      ++budget.variables;
      return v;
    }
  }
}

Formula CorpusGenerator::free_formula(std::size_t depth, VariableList scope, Budget& budget) {
  const bool room = budget.variables < spec_.max_variables;
  const bool can_forall = depth > 0 && room && budget.universals < spec_.max_universals;
  const bool can_exists = depth > 0 && room && budget.existentials < spec_.max_existentials;
  enum { Leaf, And, Or, Exists, Forall } choice = Leaf;
  if (scope.empty()) {
    choice = can_exists && (!can_forall || below(2) == 0) ? Exists : Forall;
  } else if (depth > 0) {
    const std::size_t r = below(10);
    if (r < 3) {
      choice = Leaf;
    } else if (r < 5) {
      choice = And;
    } else if (r < 7) {
      choice = Or;
    } else if (r < 9) {
      choice = can_exists ? Exists : can_forall ? Forall : And;
    } else {
      choice = can_forall ? Forall : can_exists ? Exists : Or;
    }
  }
  switch (choice) {
    case Leaf:
      return leaf(scope, budget);
    case And:
    case Or: {
      Formula lhs = free_formula(depth - 1, scope, budget);
      Formula rhs = free_formula(depth - 1, scope, budget);
      return choice == And ? Formula::conj(lhs, rhs) : Formula::disj(lhs, rhs);
    }
    case Exists:
    case Forall: {
      if (!can_exists && !can_forall) throw UsageError("corpus spec leaves no room for a quantifier");
      (choice == Exists ? budget.existentials : budget.universals)++;
      Variable v = fresh(budget);
      scope.push_back(v);
      Formula body = free_formula(depth - 1, scope, budget);
      return choice == Exists ? Formula::exists(v, body) : Formula::forall(v, body);
    }
  }
  return leaf(scope, budget);
}

Formula CorpusGenerator::forall_exists(Budget& budget) {
  const std::size_t cap = spec_.max_variables;
  const std::size_t k = below(std::min(spec_.max_universals, cap) + 1);
  std::size_t m = below(std::min(spec_.max_existentials, cap - k) + 1);
  VariableList xs;
  VariableList ys;
  if (k + m == 0) m = spec_.max_existentials > 0 ? 1 : 0;
  const std::size_t universals = k + m == 0 ? 1 : k;
  for (std::size_t i = 0; i < universals; ++i) xs.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m; ++i) ys.push_back("y" + std::to_string(i + 1));
  VariableList scope = xs;
  scope.insert(scope.end(), ys.begin(), ys.end());
  Formula out = quantifier_free(spec_.max_depth, scope, budget);
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) out = Formula::exists(*it, out);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

Formula CorpusGenerator::quantifier_free(std::size_t depth, const VariableList& scope, Budget& budget) {
  if (depth == 0 || below(10) < 3) return leaf(scope, budget);
  Formula lhs = quantifier_free(depth - 1, scope, budget);
  Formula rhs = quantifier_free(depth - 1, scope, budget);
  return below(2) == 0 ? Formula::conj(lhs, rhs) : Formula::disj(lhs, rhs);
}

Formula CorpusGenerator::leaf(const VariableList& scope, Budget& budget) {
  auto pick = [&] { return scope[below(scope.size())]; };
  auto picks = [&](std::size_t n) {
    VariableList out(n);
    for (auto& v : out) v = pick();
    return out;
  };
  std::vector<AtomKind> kinds;
  for (AtomKind k : spec_.atoms)
    if (k != AtomKind::Ind || budget.independence < spec_.max_independence) kinds.push_back(k);
  const AtomKind kind = kinds.empty() ? AtomKind::FirstOrder : kinds[below(kinds.size())];
  const std::size_t wide = std::min<std::size_t>(2, scope.size());
  switch (kind) {
    case AtomKind::FirstOrder: {
      const auto& rels = spec_.vocabulary.relations;
      const std::size_t options = rels.size() + (spec_.equality ? 1 : 0);
      if (options == 0) throw UsageError("corpus vocabulary has no literals");
      const std::size_t r = below(options);
      const bool positive = below(2) == 0;
      if (r == rels.size()) {
        Variable a = pick();
        return Formula::equality(a, pick(), positive);
      }
      return Formula::literal(positive, rels[r].name, picks(rels[r].arity));
    }
    case AtomKind::Dep: {
      VariableList condition = picks(below(wide + 1));
      return Formula::dep(std::move(condition), pick());
    }
    case AtomKind::Inc: {
      const std::size_t width = 1 + below(wide);
      VariableList left = picks(width);
      return Formula::inc(std::move(left), picks(width));
    }
    case AtomKind::Ind: {
      ++budget.independence;
      const bool unit = spec_.shape == CorpusShape::ForallExists;
      VariableList condition = picks(below(2));
      VariableList left = picks(unit ? 1 : 1 + below(wide));
      VariableList right = picks(unit ? 1 : 1 + below(wide));
      return Formula::ind(std::move(condition), std::move(left), std::move(right));
    }
  }
  return Formula::equality(pick(), pick());
}

std::vector<Formula> generate_corpus(const CorpusSpec& spec) {
  CorpusGenerator gen(spec);
  std::vector<Formula> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(gen.next());
  return out;
}

std::size_t formula_depth(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::And:
    case FormulaKind::Or:
      return 1 + std::max(formula_depth(f.lhs()), formula_depth(f.rhs()));
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return 1 + formula_depth(f.body());
    default:
      return 0;
  }
}

}  // namespace teamlogic
