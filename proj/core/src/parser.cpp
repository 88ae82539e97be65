#include "teamlogic/parser.hpp"

#include "lexer.hpp"

namespace teamlogic {

namespace {

using detail::Tok;
using detail::TokenStream;

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : ts_(detail::tokenize(text)) {}

  Formula parse() {
    Formula f = disjunction();
    if (!ts_.at(Tok::End)) ts_.fail("expected end of formula");
    return f;
  }

 private:
  Formula disjunction() {
    Formula f = conjunction();
    while (ts_.accept(Tok::Bar)) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = quantified();
    while (ts_.accept(Tok::Amp)) f = Formula::conj(f, quantified());
    return f;
  }

  bool at_quantifier() const {
    return (ts_.at_ident("A") || ts_.at_ident("E")) && ts_.peek(1).kind == Tok::Ident &&
           ts_.peek(2).kind == Tok::Dot;
  }

  Formula quantified() {
    if (at_quantifier()) {
      const bool universal = ts_.next().text == "A";
      Variable v = ts_.next().text;
      ts_.next();
      Formula body = quantified();
      return universal ? Formula::forall(std::move(v), std::move(body))
                       : Formula::exists(std::move(v), std::move(body));
    }
    return unit();
  }

  VariableList var_list() {
    VariableList vars;
    while (ts_.at(Tok::Ident)) vars.push_back(ts_.next().text);
    return vars;
  }

  Formula unit() {
    if (ts_.accept(Tok::LParen)) {
      Formula f = disjunction();
      ts_.expect(Tok::RParen, "to close parenthesis");
      return f;
    }
    if (ts_.accept(Tok::Bang)) {
      if (!ts_.at(Tok::Ident) || ts_.peek(1).kind != Tok::LParen) {
        ts_.fail("negation applies only to predicate literals");
      }
      if (is_atom_keyword(ts_.peek().text)) {
        ts_.fail("negation of a dependency atom is not in negation normal form");
      }
      return predicate_literal(false);
    }
    if (!ts_.at(Tok::Ident)) ts_.fail("expected formula");
    if (ts_.peek(1).kind == Tok::LParen) {
      const std::string& name = ts_.peek().text;
      if (name == "dep") return dep_atom();
      if (name == "ind") return ind_atom();
      if (name == "inc") return inc_atom();
      return predicate_literal(true);
    }
    Variable lhs = ts_.next().text;
    bool positive;
    if (ts_.accept(Tok::Eq)) {
      positive = true;
    } else if (ts_.accept(Tok::Neq)) {
      positive = false;
    } else {
      ts_.fail("expected '=' or '!=' after variable '" + lhs + "'");
    }
    Variable rhs = ts_.expect(Tok::Ident, "on right side of equality").text;
    return Formula::equality(std::move(lhs), std::move(rhs), positive);
  }

  static bool is_atom_keyword(const std::string& s) { return s == "dep" || s == "ind" || s == "inc"; }

  Formula predicate_literal(bool positive) {
    std::string name = ts_.next().text;
    ts_.expect(Tok::LParen, "after predicate name");
    VariableList args = var_list();
    ts_.expect(Tok::RParen, "to close predicate arguments");
    return Formula::literal(positive, std::move(name), std::move(args));
  }

  Formula dep_atom() {
    ts_.next();
    ts_.next();
    VariableList cond = var_list();
    ts_.expect(Tok::Semicolon, "in dep atom");
    Variable y = ts_.expect(Tok::Ident, "as determined variable of dep atom").text;
    ts_.expect(Tok::RParen, "to close dep atom");
    return Formula::dep(std::move(cond), std::move(y));
  }

  Formula ind_atom() {
    ts_.next();
    ts_.next();
    VariableList cond = var_list();
    ts_.expect(Tok::Semicolon, "after ind condition");
    VariableList left = var_list();
    ts_.expect(Tok::Semicolon, "after ind left tuple");
    VariableList right = var_list();
    ts_.expect(Tok::RParen, "to close ind atom");
    return Formula::ind(std::move(cond), std::move(left), std::move(right));
  }

  Formula inc_atom() {
    const detail::Token start = ts_.next();
    ts_.next();
    VariableList left = var_list();
    ts_.expect(Tok::Semicolon, "in inc atom");
    VariableList right = var_list();
    ts_.expect(Tok::RParen, "to close inc atom");
    if (left.size() != right.size()) {
      throw ParseError("inclusion atom width mismatch: " + std::to_string(left.size()) + " vs " +
                           std::to_string(right.size()),
                       start.line, start.column);
    }
    return Formula::inc(std::move(left), std::move(right));
  }

  TokenStream ts_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

}  // namespace teamlogic
