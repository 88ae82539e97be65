#include "teamlogic/prenex.hpp"

#include <algorithm>
#include <map>

#include "teamlogic/analysis.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/transform.hpp"

namespace teamlogic {

Formula PrenexSentence::matrix() const {
  std::vector<Formula> parts = chi;
  if (theta) parts.push_back(*theta);
  if (parts.empty()) throw UsageError("prenex sentence with an empty matrix");
  return Formula::conj_all(parts);
}

Formula PrenexSentence::to_formula() const {
  Formula out = matrix();
  for (auto it = existentials.rbegin(); it != existentials.rend(); ++it) out = Formula::exists(*it, out);
  for (auto it = universals.rbegin(); it != universals.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

std::string to_string(const PrenexSentence& prenex) { return to_string(prenex.to_formula()); }

namespace {

VariableList concat(VariableList a, const VariableList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void add_unique(std::vector<Formula>& chi, const Formula& atom) {
  if (std::find(chi.begin(), chi.end(), atom) == chi.end()) chi.push_back(atom);
}

std::optional<Formula> both(const std::optional<Formula>& a, const std::optional<Formula>& b) {
  if (!a) return b;
  if (!b) return a;
  return Formula::conj(*a, *b);
}

class PrenexBuilder {
 public:
  explicit PrenexBuilder(const Formula& sentence) { names_.reserve_all(sentence); }

  PrenexSentence build(const Formula& f, const VariableList& scope) {
    switch (f.kind()) {
      case FormulaKind::Literal:
        return {{}, {}, {}, f};
      case FormulaKind::Dep:
      case FormulaKind::Ind:
      case FormulaKind::Inc:
        return atom(f);
      case FormulaKind::Forall: {
        PrenexSentence inner = build(f.body(), concat(scope, {f.bound()}));
        inner.universals.insert(inner.universals.begin(), f.bound());
        return inner;
      }
      case FormulaKind::Exists: {
        PrenexSentence inner = build(f.body(), concat(scope, {f.bound()}));
        return existential(f.bound(), inner, scope);
      }
      case FormulaKind::And:
        return conjunction(build(f.lhs(), scope), build(f.rhs(), scope), scope);
      case FormulaKind::Or:
        return disjunction(build(f.lhs(), scope), build(f.rhs(), scope), scope);
    }
    throw UsageError("unreachable formula kind");
  }

 private:
  // Each non-conditional variable gets an existential copy equal to it.
  PrenexSentence atom(const Formula& a) {
    const VariableList noncond = nonconditional_variables(a);
    if (noncond.empty()) return {{}, {}, {a}, std::nullopt};
    std::map<Variable, Variable> primes;
    PrenexSentence out;
    std::vector<Formula> equalities;
    for (const auto& x : noncond) {
      const Variable p = names_.fresh(x);
      primes[x] = p;
      out.existentials.push_back(p);
      equalities.push_back(Formula::equality(p, x));
    }
    out.chi.push_back(substitute_variables(a, primes));
    out.theta = Formula::conj_all(equalities);
    return out;
  }

  // ∃x ∀ū ∃v̄ (χ ∧ θ) becomes ∀ū ∃x ∃v̄ (dep(scope; x) ∧ χ ∧ θ).
  static PrenexSentence existential(const Variable& x, PrenexSentence inner, const VariableList& scope) {
    inner.existentials.insert(inner.existentials.begin(), x);
    std::vector<Formula> chi{Formula::dep(scope, x)};
    for (const auto& a : inner.chi) add_unique(chi, a);
    inner.chi = std::move(chi);
    return inner;
  }

  // Renames the universals of `shorter` onto the first ones of `target` and
  // pads its prefix; its existentials keep depending only on what they saw.
  static PrenexSentence pad(const PrenexSentence& shorter, const VariableList& target, const VariableList& scope) {
    const std::size_t k = shorter.universals.size();
    std::map<Variable, Variable> renaming;
    for (std::size_t i = 0; i < k; ++i) renaming[shorter.universals[i]] = target[i];
    PrenexSentence out;
    out.universals = target;
    out.existentials = shorter.existentials;
    for (const auto& a : shorter.chi) add_unique(out.chi, substitute_variables(a, renaming));
    if (shorter.theta) out.theta = substitute_variables(*shorter.theta, renaming);
    const VariableList seen = concat(scope, VariableList(target.begin(), target.begin() + static_cast<long>(k)));
    for (const auto& y : shorter.existentials) add_unique(out.chi, Formula::dep(seen, y));
    return out;
  }

  // Brings both sides onto the universal prefix of the longer one; on ties
  // the right side is renamed.
  static std::pair<PrenexSentence, PrenexSentence> align(PrenexSentence left, PrenexSentence right,
                                                         const VariableList& scope) {
    if (right.universals.size() <= left.universals.size()) {
      right = pad(right, left.universals, scope);
    } else {
      left = pad(left, right.universals, scope);
    }
    return {std::move(left), std::move(right)};
  }

  static PrenexSentence conjunction(PrenexSentence l, PrenexSentence r, const VariableList& scope) {
    auto [left, right] = align(std::move(l), std::move(r), scope);
    PrenexSentence out;
    out.universals = left.universals;
    out.existentials = concat(left.existentials, right.existentials);
    out.chi = left.chi;
    for (const auto& a : right.chi) add_unique(out.chi, a);
    out.theta = both(left.theta, right.theta);
    return out;
  }

  PrenexSentence disjunction(PrenexSentence l, PrenexSentence r, const VariableList& scope) {
    auto [left, right] = align(std::move(l), std::move(r), scope);
    const Variable a = names_.fresh("a");
    const Variable b = names_.fresh("b");
    const Variable c = names_.fresh("c");
    PrenexSentence out;
    out.universals = left.universals;
    out.existentials = concat(concat({a, b, c}, left.existentials), right.existentials);
    // The dependence atoms of moving ∃a ∃b ∃c past the universal prefix.
    add_unique(out.chi, Formula::dep(scope, a));
    add_unique(out.chi, Formula::dep(concat(scope, {a}), b));
    add_unique(out.chi, Formula::dep(concat(scope, {a, b}), c));
    add_unique(out.chi, Formula::dep({}, b));
    add_unique(out.chi, Formula::dep({}, c));
    for (const auto& atom : left.chi) add_unique(out.chi, relativize({a}, atom));
    for (const auto& atom : right.chi) add_unique(out.chi, relativize({a}, atom));
    const Formula left_tag = Formula::equality(a, b);
    const Formula right_tag = Formula::equality(a, c);
    const Formula choice = Formula::disj(left.theta ? Formula::conj(*left.theta, left_tag) : left_tag,
                                         right.theta ? Formula::conj(*right.theta, right_tag) : right_tag);
    out.theta = Formula::conj(Formula::equality(b, c, false), choice);
    return out;
  }

  NameSupply names_;
};

}  // namespace

PrenexSentence to_prenex_normal_form(const Formula& sentence, const PrenexOptions& options) {
  if (!free_variables(sentence).empty()) throw UsageError("prenex normal form needs a sentence");
  Formula input = sentence;
  if (!classify_fragment(sentence).quantified_exactly_once) {
    if (!options.normalize_variables) {
      throw UsageError("a variable is quantified more than once; enable normalization to rename it");
    }
    input = normalize_variables(sentence);
  }
  PrenexBuilder builder(input);
  return builder.build(input, {});
}

std::vector<std::string> prenex_violations(const PrenexSentence& p) {
  std::vector<std::string> problems;
  for (const auto& a : p.chi) {
    if (!a.is_dependency_atom()) {
      problems.push_back("chi contains a non-atom: " + to_string(a));
      continue;
    }
    for (const auto& v : nonconditional_variables(a)) {
      if (std::find(p.existentials.begin(), p.existentials.end(), v) == p.existentials.end()) {
        problems.push_back("non-conditional variable " + v + " of " + to_string(a) + " is not existential");
      }
    }
  }
  if (p.theta && !(is_first_order(*p.theta) && is_quantifier_free(*p.theta))) {
    problems.push_back("theta is not quantifier-free first-order");
  }
  if (p.chi.empty() && !p.theta) problems.push_back("empty matrix");
  VariableSet seen;
  for (const auto& v : concat(p.universals, p.existentials)) {
    if (!seen.insert(v).second) problems.push_back("variable " + v + " is quantified twice");
  }
  if (p.chi.empty() && !p.theta) return problems;
  for (const auto& v : free_variables(p.matrix())) {
    if (!seen.count(v)) problems.push_back("variable " + v + " is free");
  }
  return problems;
}

}  // namespace teamlogic
