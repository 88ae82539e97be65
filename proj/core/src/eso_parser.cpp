#include <optional>

#include "lexer.hpp"
#include "teamlogic/eso.hpp"

namespace teamlogic {

namespace {

using detail::Tok;
using detail::TokenStream;

class EsoParser {
 public:
  explicit EsoParser(std::string_view text) : ts_(detail::tokenize(text)) {}

  EsoSentence sentence() {
    std::vector<SymbolDecl> functions;
    std::vector<SymbolDecl> relations;
    VariableList universals;
    if (ts_.at_ident("exists") && !starts_term(1)) {
      ts_.next();
      bool relation = false;
      while (!ts_.accept(Tok::Dot)) {
        if (ts_.at_ident("relation") && ts_.peek(1).kind != Tok::Slash) {
          ts_.next();
          relation = true;
          continue;
        }
        if (ts_.at_ident("function") && ts_.peek(1).kind != Tok::Slash) {
          ts_.next();
          relation = false;
          continue;
        }
        SymbolDecl d;
        d.name = ts_.expect(Tok::Ident, "in symbol declaration").text;
        ts_.expect(Tok::Slash, "after symbol name");
        d.arity = std::stoul(ts_.expect(Tok::Number, "for symbol arity").text);
        (relation ? relations : functions).push_back(std::move(d));
      }
    }
    if (ts_.at_ident("forall") && !starts_term(1)) {
      ts_.next();
      while (!ts_.accept(Tok::Dot)) universals.push_back(ts_.expect(Tok::Ident, "in universal prefix").text);
    }
    EsoFormula matrix = implication();
    if (!ts_.at(Tok::End)) ts_.fail("expected end of ESO sentence");
    EsoSentence s{std::move(functions), std::move(relations), std::move(universals), std::move(matrix)};
    validate_eso(s);
    return s;
  }

 private:
  // `exists(x) = y` is a term, not a prefix.
  bool starts_term(std::size_t ahead) const {
    const Tok k = ts_.peek(ahead).kind;
    return k == Tok::LParen || k == Tok::Eq || k == Tok::Neq;
  }

  EsoFormula implication() {
    EsoFormula lhs = disjunction();
    if (ts_.accept(Tok::Arrow)) return EsoFormula::implies(std::move(lhs), implication());
    return lhs;
  }

  EsoFormula disjunction() {
    EsoFormula out = conjunction();
    while (ts_.accept(Tok::Bar)) out = EsoFormula::disj(std::move(out), conjunction());
    return out;
  }

  EsoFormula conjunction() {
    EsoFormula out = unary();
    while (ts_.accept(Tok::Amp)) out = EsoFormula::conj(std::move(out), unary());
    return out;
  }

  EsoFormula unary() {
    if (ts_.accept(Tok::Bang)) return EsoFormula::negation(unary());
    if (ts_.accept(Tok::LParen)) {
      EsoFormula inner = implication();
      ts_.expect(Tok::RParen, "to close parenthesis");
      return inner;
    }
    return literal();
  }

  EsoFormula literal() {
    if (!ts_.at(Tok::Ident)) ts_.fail("expected a literal");
    Term lhs = term();
    if (ts_.accept(Tok::Eq)) return EsoFormula::equal(std::move(lhs), term());
    if (ts_.accept(Tok::Neq)) return EsoFormula::negation(EsoFormula::equal(std::move(lhs), term()));
    if (lhs.is_variable()) ts_.fail("expected '=' or '!=' after term");
    // P(t1..tn) with no comparison is a relation atom.
    return EsoFormula::atom(lhs.name(), lhs.arguments());
  }

  Term term() {
    std::string name = ts_.expect(Tok::Ident, "for term").text;
    if (!ts_.accept(Tok::LParen)) return Term::variable(std::move(name));
    std::vector<Term> args;
    while (!ts_.accept(Tok::RParen)) {
      args.push_back(term());
      ts_.accept(Tok::Comma);
    }
    return Term::apply(std::move(name), std::move(args));
  }

  TokenStream ts_;
};

}  // namespace

EsoSentence parse_eso(std::string_view text) { return EsoParser(text).sentence(); }

}  // namespace teamlogic
