#include <map>
#include <optional>
#include <set>

#include "teamlogic/eso.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/prenex.hpp"
#include "teamlogic/structure.hpp"
#include "teamlogic/transform.hpp"

namespace teamlogic {

namespace {

/// Deterministic symbol names: `base`, then base1, base2, ... skipping taken names.
class SymbolNames {
 public:
  void reserve(const std::string& name) { used_.insert(name); }

  std::string next(const std::string& base, bool bare_first) {
    std::size_t& counter = counters_[base];
    for (;;) {
      std::string candidate = (bare_first && counter == 0) ? base : base + std::to_string(counter);
      ++counter;
      if (used_.insert(candidate).second) return candidate;
    }
  }

 private:
  std::set<std::string> used_;
  std::map<std::string, std::size_t> counters_;
};

class Compiler {
 public:
  Compiler(const Formula& sentence, const FoToEsoOptions& options) : options_(options) {
    if (!free_variables(sentence).empty()) throw UsageError("fo_to_eso expects a sentence");
    Formula f = sentence;
    while (f.kind() == FormulaKind::Forall) {
      universals_.push_back(f.bound());
      f = f.body();
    }
    while (f.kind() == FormulaKind::Exists) {
      existentials_.push_back(f.bound());
      f = f.body();
    }
    if (!is_quantifier_free(f)) throw UsageError("fo_to_eso expects a forall-exists prenex sentence");
    chi_ = f;
    std::set<Variable> seen;
    for (const auto* group : {&universals_, &existentials_})
      for (const auto& v : *group)
        if (!seen.insert(v).second) throw UsageError("variable '" + v + "' quantified twice");
    for (const auto& v : sentence.all_variables()) names_.reserve(v);
    for (const auto& r : vocabulary_of(sentence).relations) names_.reserve(r.name);
  }

  EsoSentence run() {
    for (const auto& y : existentials_) {
      const std::string name = names_.next("f_" + y, true);
      skolem_[y] = name;
      functions_.push_back({name, universals_.size()});
    }
    const std::string top = new_relation("S", universals_.size());
    std::vector<EsoFormula> clauses{relation_at(top, base_args())};
    translate(chi_, top, clauses);
    VariableList universals = universals_;
    if (extra_) universals.push_back(*extra_);
    return EsoSentence{functions_, relations_, universals, EsoFormula::conj_all(clauses)};
  }

 private:
  std::vector<Term> base_args() const {
    std::vector<Term> out;
    for (const auto& x : universals_) out.push_back(Term::variable(x));
    return out;
  }

  /// The value of `v` in the row whose universal part is `args`.
  Term at(const Variable& v, const std::vector<Term>& args) const {
    for (std::size_t i = 0; i < universals_.size(); ++i)
      if (universals_[i] == v) return args[i];
    auto it = skolem_.find(v);
    if (it == skolem_.end()) throw UsageError("variable '" + v + "' is not quantified");
    return Term::apply(it->second, args);
  }

  std::vector<Term> at_all(const VariableList& vars, const std::vector<Term>& args) const {
    std::vector<Term> out;
    for (const auto& v : vars) out.push_back(at(v, args));
    return out;
  }

  static EsoFormula relation_at(const std::string& rel, std::vector<Term> args) {
    return EsoFormula::atom(rel, std::move(args));
  }

  std::string new_relation(const std::string& base, std::size_t arity) {
    std::string name = names_.next(base, true);
    relations_.push_back({name, arity});
    return name;
  }

  std::vector<Term> new_functions(const std::string& base, std::size_t count, const std::vector<Term>& args) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < count; ++i) {
      std::string name = names_.next(base, false);
      functions_.push_back({name, args.size()});
      out.push_back(Term::apply(name, args));
    }
    return out;
  }

  EsoFormula first_order(const Formula& f, const std::vector<Term>& args) const {
    switch (f.kind()) {
      case FormulaKind::Literal: {
        EsoFormula atom = f.is_equality()
                              ? EsoFormula::equal(at(f.arguments()[0], args), at(f.arguments()[1], args))
                              : EsoFormula::atom(f.predicate(), at_all(f.arguments(), args));
        return f.positive() ? atom : EsoFormula::negation(atom);
      }
      case FormulaKind::And:
        return EsoFormula::conj(first_order(f.lhs(), args), first_order(f.rhs(), args));
      case FormulaKind::Or:
        return EsoFormula::disj(first_order(f.lhs(), args), first_order(f.rhs(), args));
      default:
        throw UsageError("unexpected subformula in first-order translation");
    }
  }

  void translate(const Formula& f, const std::string& rel, std::vector<EsoFormula>& out) {
    const std::vector<Term> xs = base_args();
    const EsoFormula guard = relation_at(rel, xs);
    const bool collapse = options_.collapse_first_order && f.is_connective() && is_first_order(f);
    switch (collapse ? FormulaKind::Literal : f.kind()) {
      case FormulaKind::Literal:
        out.push_back(EsoFormula::implies(guard, first_order(f, xs)));
        return;
      case FormulaKind::Dep: {
        std::vector<Term> d = new_functions("d", 1, at_all(f.condition(), xs));
        out.push_back(EsoFormula::implies(guard, EsoFormula::equal(at(f.determined(), xs), d[0])));
        return;
      }
      case FormulaKind::Inc: {
        const std::vector<Term> g = new_functions("g", universals_.size(), xs);
        std::vector<EsoFormula> body{relation_at(rel, g)};
        for (std::size_t i = 0; i < f.left_vars().size(); ++i)
          body.push_back(EsoFormula::equal(at(f.left_vars()[i], xs), at(f.right_vars()[i], g)));
        out.push_back(EsoFormula::implies(guard, EsoFormula::conj_all(body)));
        return;
      }
      case FormulaKind::Ind:
        translate_ind(f, rel, out);
        return;
      case FormulaKind::And:
        translate(f.lhs(), rel, out);
        translate(f.rhs(), rel, out);
        return;
      case FormulaKind::Or: {
        const std::string left = new_relation("S", universals_.size());
        const std::string right = new_relation("S", universals_.size());
        translate(f.lhs(), left, out);
        translate(f.rhs(), right, out);
        const EsoFormula l = relation_at(left, xs);
        const EsoFormula r = relation_at(right, xs);
        out.push_back(EsoFormula::implies(
            guard, EsoFormula::conj(EsoFormula::disj(l, r), EsoFormula::negation(EsoFormula::conj(l, r)))));
        out.push_back(EsoFormula::implies(l, guard));
        out.push_back(EsoFormula::implies(r, guard));
        return;
      }
      default:
        throw UsageError("quantifier inside the quantifier-free part");
    }
  }

  void translate_ind(const Formula& f, const std::string& rel, std::vector<EsoFormula>& out) {
    if (f.left_vars().empty() || f.right_vars().empty()) return;
    if (f.left_vars().size() != 1 || f.right_vars().size() != 1)
      throw UsageError("independence atom " + to_string(f) + " is not in unit form; contract it first");
    if (!extra_) {
      extra_ = names_.next("xp", true);
    }
    const std::vector<Term> xs = base_args();
    const Variable& z = f.left_vars()[0];
    const Variable& w = f.right_vars()[0];
    const std::size_t width = f.condition().size() + 1;
    const std::string s1 = new_relation("S", width);
    const std::string s2 = new_relation("S", width);
    std::vector<Term> hargs = xs;
    hargs.push_back(Term::variable(*extra_));
    const std::vector<Term> h = new_functions("h", universals_.size(), hargs);

    auto with = [](std::vector<Term> prefix, Term last) {
      prefix.push_back(std::move(last));
      return prefix;
    };
    const std::vector<Term> u1 = at_all(f.condition(), xs);
    std::vector<EsoFormula> combine{relation_at(rel, h)};
    for (const auto& u : f.condition()) combine.push_back(EsoFormula::equal(at(u, xs), at(u, h)));
    combine.push_back(EsoFormula::equal(at(z, xs), at(z, h)));
    combine.push_back(EsoFormula::equal(Term::variable(*extra_), at(w, h)));
    const EsoFormula body = EsoFormula::conj_all({
        relation_at(s1, with(u1, at(z, xs))),
        relation_at(s2, with(u1, at(w, xs))),
        EsoFormula::implies(relation_at(s2, with(u1, Term::variable(*extra_))), EsoFormula::conj_all(combine)),
    });
    out.push_back(EsoFormula::implies(relation_at(rel, xs), body));
  }

  FoToEsoOptions options_;
  VariableList universals_;
  VariableList existentials_;
  Formula chi_ = Formula::equality("x", "x");
  SymbolNames names_;
  std::map<Variable, std::string> skolem_;
  std::vector<SymbolDecl> functions_;
  std::vector<SymbolDecl> relations_;
  std::optional<Variable> extra_;
};

}  // namespace

EsoSentence fo_to_eso(const Formula& sentence, const FoToEsoOptions& options) {
  return Compiler(sentence, options).run();
}

EsoSentence sentence_to_eso(const Formula& sentence, const FoToEsoOptions& options) {
  const PrenexSentence prenex = to_prenex_normal_form(sentence);
  Formula f = contract_independence(prenex.matrix());
  for (auto it = prenex.existentials.rbegin(); it != prenex.existentials.rend(); ++it) f = Formula::exists(*it, f);
  for (auto it = prenex.universals.rbegin(); it != prenex.universals.rend(); ++it) f = Formula::forall(*it, f);
  return fo_to_eso(f, options);
}

}  // namespace teamlogic
