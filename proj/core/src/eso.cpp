#include "teamlogic/eso.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "teamlogic/error.hpp"

namespace teamlogic {

Term Term::variable(Variable name) {
  Term t;
  t.name_ = std::move(name);
  return t;
}

Term Term::apply(std::string function, std::vector<Term> arguments) {
  Term t;
  t.name_ = std::move(function);
  t.arguments_ = std::move(arguments);
  t.variable_ = false;
  return t;
}

bool operator<(const Term& a, const Term& b) {
  if (a.variable_ != b.variable_) return a.variable_;
  if (a.name_ != b.name_) return a.name_ < b.name_;
  return std::lexicographical_compare(a.arguments_.begin(), a.arguments_.end(), b.arguments_.begin(),
                                      b.arguments_.end());
}

std::size_t Term::depth() const {
  std::size_t inner = 0;
  for (const auto& a : arguments_) inner = std::max(inner, a.depth());
  return variable_ ? 0 : inner + 1;
}

EsoFormula EsoFormula::atom(std::string relation, std::vector<Term> terms) {
  return EsoFormula(std::make_shared<const Node>(Node{EsoKind::Atom, std::move(relation), std::move(terms), {}}));
}

EsoFormula EsoFormula::equal(Term lhs, Term rhs) {
  return EsoFormula(
      std::make_shared<const Node>(Node{EsoKind::Equal, {}, {std::move(lhs), std::move(rhs)}, {}}));
}

EsoFormula EsoFormula::negation(EsoFormula body) {
  return EsoFormula(std::make_shared<const Node>(Node{EsoKind::Not, {}, {}, {std::move(body)}}));
}

EsoFormula EsoFormula::conj(EsoFormula lhs, EsoFormula rhs) {
  return EsoFormula(std::make_shared<const Node>(Node{EsoKind::And, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

EsoFormula EsoFormula::disj(EsoFormula lhs, EsoFormula rhs) {
  return EsoFormula(std::make_shared<const Node>(Node{EsoKind::Or, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

EsoFormula EsoFormula::implies(EsoFormula lhs, EsoFormula rhs) {
  return EsoFormula(
      std::make_shared<const Node>(Node{EsoKind::Implies, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

EsoFormula EsoFormula::conj_all(const std::vector<EsoFormula>& parts) {
  if (parts.empty()) throw UsageError("empty conjunction");
  EsoFormula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conj(out, parts[i]);
  return out;
}

bool operator==(const EsoFormula& a, const EsoFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.relation() == b.relation() && a.terms() == b.terms() &&
         a.children() == b.children();
}

const SymbolDecl* EsoSentence::find_function(std::string_view name) const {
  for (const auto& d : functions)
    if (d.name == name) return &d;
  return nullptr;
}

const SymbolDecl* EsoSentence::find_relation(std::string_view name) const {
  for (const auto& d : relations)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

void check_term(const EsoSentence& s, const std::set<Variable>& universals, const Term& t) {
  if (t.is_variable()) {
    if (!universals.count(t.name())) throw UsageError("variable '" + t.name() + "' is not universally quantified");
    return;
  }
  const SymbolDecl* d = s.find_function(t.name());
  if (!d) throw UsageError("undeclared function symbol '" + t.name() + "'");
  if (d->arity != t.arguments().size())
    throw UsageError("function '" + t.name() + "' has arity " + std::to_string(d->arity) + " but is applied to " +
                     std::to_string(t.arguments().size()) + " arguments");
  for (const auto& a : t.arguments()) check_term(s, universals, a);
}

void check_formula(const EsoSentence& s, const std::set<Variable>& universals, const EsoFormula& f) {
  switch (f.kind()) {
    case EsoKind::Atom:
      if (s.find_function(f.relation()))
        throw UsageError("function symbol '" + f.relation() + "' used as a relation");
      if (const SymbolDecl* d = s.find_relation(f.relation()); d && d->arity != f.terms().size())
        throw UsageError("relation '" + f.relation() + "' has arity " + std::to_string(d->arity) +
                         " but is applied to " + std::to_string(f.terms().size()) + " arguments");
      [[fallthrough]];
    case EsoKind::Equal:
      for (const auto& t : f.terms()) check_term(s, universals, t);
      break;
    default:
      for (const auto& c : f.children()) check_formula(s, universals, c);
  }
}

void print_term(std::ostream& out, const Term& t) {
  out << t.name();
  if (t.is_variable()) return;
  out << '(';
  for (std::size_t i = 0; i < t.arguments().size(); ++i) {
    if (i) out << ", ";
    print_term(out, t.arguments()[i]);
  }
  out << ')';
}

int precedence(EsoKind k) {
  switch (k) {
    case EsoKind::Implies: return 0;
    case EsoKind::Or: return 1;
    case EsoKind::And: return 2;
    default: return 3;
  }
}

void print_formula(std::ostream& out, const EsoFormula& f);

void print_child(std::ostream& out, const EsoFormula& child, bool wrap) {
  if (wrap) out << '(';
  print_formula(out, child);
  if (wrap) out << ')';
}

void print_formula(std::ostream& out, const EsoFormula& f) {
  switch (f.kind()) {
    case EsoKind::Atom:
      out << f.relation() << '(';
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) out << ", ";
        print_term(out, f.terms()[i]);
      }
      out << ')';
      return;
    case EsoKind::Equal:
      print_term(out, f.terms()[0]);
      out << " = ";
      print_term(out, f.terms()[1]);
      return;
    case EsoKind::Not: {
      const EsoFormula& b = f.children()[0];
      if (b.kind() == EsoKind::Equal) {
        print_term(out, b.terms()[0]);
        out << " != ";
        print_term(out, b.terms()[1]);
        return;
      }
      out << '!';
      print_child(out, b, precedence(b.kind()) < 3);
      return;
    }
    case EsoKind::And:
    case EsoKind::Or:
    case EsoKind::Implies: {
      const int p = precedence(f.kind());
      const auto& l = f.children()[0];
      const auto& r = f.children()[1];
      const bool right_assoc = f.kind() == EsoKind::Implies;
      print_child(out, l, precedence(l.kind()) < p || (right_assoc && precedence(l.kind()) == p));
      out << (f.kind() == EsoKind::And ? " & " : f.kind() == EsoKind::Or ? " | " : " -> ");
      print_child(out, r, precedence(r.kind()) < p || (!right_assoc && precedence(r.kind()) == p));
      return;
    }
  }
}

void print_decls(std::ostream& out, const std::vector<SymbolDecl>& decls) {
  for (const auto& d : decls) out << ' ' << d.name << '/' << d.arity;
}

}  // namespace

void validate_eso(const EsoSentence& sentence) {
  std::set<std::string> names;
  for (const auto* group : {&sentence.functions, &sentence.relations})
    for (const auto& d : *group)
      if (!names.insert(d.name).second) throw UsageError("symbol '" + d.name + "' declared twice");
  std::set<Variable> universals;
  for (const auto& x : sentence.universals) {
    if (names.count(x)) throw UsageError("universal '" + x + "' clashes with a symbol name");
    if (!universals.insert(x).second) throw UsageError("universal '" + x + "' quantified twice");
  }
  check_formula(sentence, universals, sentence.matrix);
}

std::string to_string(const Term& term) {
  std::ostringstream out;
  print_term(out, term);
  return out.str();
}

std::string to_string(const EsoFormula& formula) {
  std::ostringstream out;
  print_formula(out, formula);
  return out.str();
}

std::string to_string(const EsoSentence& sentence) {
  std::ostringstream out;
  out << sentence;
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const EsoSentence& s) {
  if (!s.functions.empty() || !s.relations.empty()) {
    out << "exists";
    print_decls(out, s.functions);
    if (!s.relations.empty()) {
      out << " relation";
      print_decls(out, s.relations);
    }
    out << " . ";
  }
  if (!s.universals.empty()) {
    out << "forall";
    for (const auto& x : s.universals) out << ' ' << x;
    out << " . ";
  }
  print_formula(out, s.matrix);
  return out;
}

}  // namespace teamlogic
