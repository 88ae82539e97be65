#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "teamlogic/eso.hpp"
#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

bool is_flat(const Term& t, const VariableList& universals) {
  if (t.is_variable() || t.arguments().size() != universals.size()) return false;
  for (std::size_t i = 0; i < universals.size(); ++i) {
    const Term& a = t.arguments()[i];
    if (!a.is_variable() || a.name() != universals[i]) return false;
  }
  return true;
}

void collect_terms(const EsoFormula& f, std::vector<Term>& out) {
  for (const auto& t : f.terms()) out.push_back(t);
  for (const auto& c : f.children()) collect_terms(c, out);
}

}  // namespace

const DurandSymbol* DurandProfile::find(std::string_view name) const {
  for (const auto& s : symbols)
    if (s.name == name) return &s;
  return nullptr;
}

DurandProfile validate_durand_form(const EsoSentence& sentence) {
  DurandProfile p;
  p.k = sentence.rank();
  try {
    validate_eso(sentence);
  } catch (const UsageError& e) {
    p.diagnostics.push_back(e.what());
    return p;
  }
  if (!sentence.relations.empty()) p.diagnostics.push_back("quantified relations are not allowed");
  std::map<std::string, std::size_t> index;
  for (const auto& d : sentence.functions) {
    index[d.name] = p.symbols.size();
    DurandSymbol s;
    s.name = d.name;
    s.arity = d.arity;
    s.arity_equals_k = d.arity == p.k;
    if (!s.arity_equals_k)
      p.diagnostics.push_back(d.name + ": arity " + std::to_string(d.arity) + " differs from k = " +
                              std::to_string(p.k));
    p.symbols.push_back(s);
  }

  std::vector<Term> terms;
  collect_terms(sentence.matrix, terms);
  std::set<Term> composed;
  for (const auto& t : terms) {
    if (t.is_variable()) continue;
    DurandSymbol& outer = p.symbols[index.at(t.name())];
    if (is_flat(t, sentence.universals)) {
      outer.has_flat_occurrence = true;
      continue;
    }
    const bool args_flat = t.arguments().size() == p.k && !t.arguments().empty() &&
                           std::all_of(t.arguments().begin(), t.arguments().end(),
                                       [&](const Term& a) { return is_flat(a, sentence.universals); });
    if (!args_flat) {
      p.diagnostics.push_back(to_string(t) + ": occurrence is neither flat nor composed of flat terms");
      continue;
    }
    std::set<std::string> distinct{t.name()};
    for (const auto& a : t.arguments()) distinct.insert(a.name());
    if (distinct.size() != t.arguments().size() + 1)
      p.diagnostics.push_back(to_string(t) + ": symbols of a composed term must be pairwise distinct");
    outer.is_outer = true;
    for (const auto& a : t.arguments()) p.symbols[index.at(a.name())].is_inner = true;
    if (composed.insert(t).second) ++outer.composed_count;
  }
  for (const auto& s : p.symbols) {
    if (s.is_inner && s.is_outer) p.diagnostics.push_back(s.name + ": both inner and outer function symbol");
    if (!s.has_flat_occurrence) p.diagnostics.push_back(s.name + ": no flat occurrence");
  }
  p.valid = p.diagnostics.empty();
  return p;
}

std::string to_string(const DurandProfile& p) {
  std::ostringstream out;
  out << "valid=" << (p.valid ? "true" : "false") << " k=" << p.k << '\n';
  for (const auto& s : p.symbols) {
    out << s.name << ": arity=" << s.arity << " c=" << s.composed_count
        << " flat=" << (s.has_flat_occurrence ? "yes" : "no") << " inner=" << (s.is_inner ? "yes" : "no")
        << " outer=" << (s.is_outer ? "yes" : "no") << " arity_is_k=" << (s.arity_equals_k ? "yes" : "no")
        << '\n';
  }
  for (const auto& d : p.diagnostics) out << "error: " << d << '\n';
  return out.str();
}

namespace {

class InclusionCompiler {
 public:
  explicit InclusionCompiler(const EsoSentence& s) : s_(s) {
    for (const auto& x : s.universals) used_.insert(x);
    collect_relations(s.matrix);
  }

  Formula run() {
    for (const auto& d : s_.functions) flat_[d.name] = fresh("y_" + d.name);
    std::vector<Formula> parts{nnf(s_.matrix, true)};
    for (const auto& [term, var] : composed_order_) {
      VariableList left;
      for (const auto& a : term.arguments()) left.push_back(flat_.at(a.name()));
      left.push_back(var);
      VariableList right = s_.universals;
      right.push_back(flat_.at(term.name()));
      parts.push_back(Formula::inc(left, right));
    }
    Formula out = Formula::conj_all(parts);
    for (auto it = composed_order_.rbegin(); it != composed_order_.rend(); ++it) out = Formula::exists(it->second, out);
    for (auto it = s_.functions.rbegin(); it != s_.functions.rend(); ++it) out = Formula::exists(flat_.at(it->name), out);
    for (auto it = s_.universals.rbegin(); it != s_.universals.rend(); ++it) out = Formula::forall(*it, out);
    return out;
  }

 private:
  void collect_relations(const EsoFormula& f) {
    if (f.kind() == EsoKind::Atom) used_.insert(f.relation());
    for (const auto& c : f.children()) collect_relations(c);
  }

  std::string fresh(std::string base) {
    while (!used_.insert(base).second) base += "_";
    return base;
  }

  Variable variable_for(const Term& t) {
    if (t.is_variable()) return t.name();
    if (is_flat(t, s_.universals)) return flat_.at(t.name());
    for (const auto& [term, var] : composed_order_)
      if (term == t) return var;
    const std::size_t j = 1 + static_cast<std::size_t>(std::count_if(
                                  composed_order_.begin(), composed_order_.end(),
                                  [&](const auto& entry) { return entry.first.name() == t.name(); }));
    Variable v = fresh("z_" + t.name() + "_" + std::to_string(j));
    composed_order_.emplace_back(t, v);
    return v;
  }

  VariableList variables_for(const std::vector<Term>& terms) {
    VariableList out;
    for (const auto& t : terms) out.push_back(variable_for(t));
    return out;
  }

  Formula nnf(const EsoFormula& f, bool positive) {
    switch (f.kind()) {
      case EsoKind::Atom:
        return Formula::literal(positive, f.relation(), variables_for(f.terms()));
      case EsoKind::Equal: {
        VariableList v = variables_for(f.terms());
        return Formula::equality(v[0], v[1], positive);
      }
      case EsoKind::Not:
        return nnf(f.children()[0], !positive);
      case EsoKind::And:
      case EsoKind::Or: {
        Formula l = nnf(f.children()[0], positive);
        Formula r = nnf(f.children()[1], positive);
        return (f.kind() == EsoKind::And) == positive ? Formula::conj(l, r) : Formula::disj(l, r);
      }
      case EsoKind::Implies: {
        Formula l = nnf(f.children()[0], !positive);
        Formula r = nnf(f.children()[1], positive);
        return positive ? Formula::disj(l, r) : Formula::conj(l, r);
      }
    }
    throw UsageError("unexpected ESO connective");
  }

  const EsoSentence& s_;
  std::set<std::string> used_;
  std::map<std::string, Variable> flat_;
  std::vector<std::pair<Term, Variable>> composed_order_;
};

}  // namespace

Formula eso_to_inclusion(const EsoSentence& sentence, const DurandProfile& profile) {
  if (!profile.valid) {
    std::string message = "sentence is not in Durand normal form";
    for (const auto& d : profile.diagnostics) message += "; " + d;
    throw UsageError(message);
  }
  if (profile.k != sentence.rank()) throw UsageError("profile does not belong to this sentence");
  return InclusionCompiler(sentence).run();
}

Formula eso_to_inclusion(const EsoSentence& sentence) {
  return eso_to_inclusion(sentence, validate_durand_form(sentence));
}

}  // namespace teamlogic
