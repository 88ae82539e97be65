#include "teamlogic/model_io.hpp"

#include <fstream>
#include <sstream>

#include "lexer.hpp"
#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

using detail::Tok;
using detail::TokenStream;

Element parse_element(TokenStream& ts, const char* context) {
  const auto tok = ts.expect(Tok::Number, context);
  return static_cast<Element>(std::stoul(tok.text));
}

Tuple parse_tuple(TokenStream& ts, std::size_t arity) {
  Tuple t;
  const auto start = ts.peek();
  if (ts.accept(Tok::LParen)) {
    if (!ts.at(Tok::RParen)) {
      t.push_back(parse_element(ts, "in tuple"));
      while (ts.accept(Tok::Comma)) t.push_back(parse_element(ts, "in tuple"));
    }
    ts.expect(Tok::RParen, "to close tuple");
  } else {
    t.push_back(parse_element(ts, "as unary tuple"));
  }
  if (t.size() != arity) {
    throw ParseError("tuple has " + std::to_string(t.size()) + " elements, relation arity is " +
                         std::to_string(arity),
                     start.line, start.column);
  }
  return t;
}

}  // namespace

Structure parse_structure(std::string_view text) {
  TokenStream ts(detail::tokenize(text));
  if (!ts.at_ident("domain")) ts.fail("structure file must start with 'domain = N'");
  ts.next();
  ts.expect(Tok::Eq, "after 'domain'");
  const auto size_tok = ts.peek();
  const Element n = parse_element(ts, "as domain size");
  if (n == 0) throw ParseError("domain must be nonempty", size_tok.line, size_tok.column);
  Structure s(n);
  while (!ts.at(Tok::End)) {
    const auto kw = ts.peek();
    if (ts.at_ident("constant")) {
      ts.next();
      const std::string name = ts.expect(Tok::Ident, "as constant name").text;
      ts.expect(Tok::Eq, "after constant name");
      const auto vtok = ts.peek();
      const Element value = parse_element(ts, "as constant value");
      if (value >= n) throw ParseError("constant value outside domain", vtok.line, vtok.column);
      s.set_constant(name, value);
    } else if (ts.at_ident("relation")) {
      ts.next();
      const std::string name = ts.expect(Tok::Ident, "as relation name").text;
      ts.expect(Tok::Slash, "between relation name and arity");
      const std::size_t arity = parse_element(ts, "as relation arity");
      if (s.has_relation(name)) throw ParseError("relation " + name + " declared twice", kw.line, kw.column);
      s.add_relation(name, arity);
      ts.expect(Tok::Eq, "after relation arity");
      ts.expect(Tok::LBrace, "to open relation tuples");
      if (!ts.at(Tok::RBrace)) {
        do {
          const auto ttok = ts.peek();
          Tuple t = parse_tuple(ts, arity);
          for (Element e : t) {
            if (e >= n) throw ParseError("tuple element outside domain", ttok.line, ttok.column);
          }
          s.add_tuple(name, t);
        } while (ts.accept(Tok::Comma));
      }
      ts.expect(Tok::RBrace, "to close relation tuples");
    } else {
      ts.fail("expected 'constant' or 'relation'");
    }
  }
  return s;
}

std::string format_structure(const Structure& s) {
  std::ostringstream out;
  out << "domain = " << s.size() << '\n';
  for (const auto& [name, value] : s.constants()) out << "constant " << name << " = " << value << '\n';
  for (const auto& [name, rel] : s.relations()) {
    out << "relation " << name << '/' << rel.arity() << " = {";
    bool first = true;
    for (const auto& t : rel.tuples()) {
      out << (first ? "" : ", ") << '(';
      for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
      out << ')';
      first = false;
    }
    out << "}\n";
  }
  return out.str();
}

Team parse_team(std::string_view text) {
  TokenStream ts(detail::tokenize(text));
  if (!ts.at_ident("vars")) ts.fail("team file must start with 'vars'");
  ts.next();
  VariableList vars;
  while (ts.at(Tok::Ident) && !ts.at_ident("row")) vars.push_back(ts.next().text);
  std::vector<Tuple> rows;
  while (!ts.at(Tok::End)) {
    const auto kw = ts.peek();
    if (!ts.at_ident("row")) ts.fail("expected 'row'");
    ts.next();
    Tuple row;
    while (ts.at(Tok::Number)) row.push_back(parse_element(ts, "in row"));
    if (row.size() != vars.size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " values for " + std::to_string(vars.size()) +
                           " variables",
                       kw.line, kw.column);
    }
    rows.push_back(std::move(row));
  }
  try {
    return Team(std::move(vars), std::move(rows));
  } catch (const UsageError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string format_team(const Team& team) { return to_string(team); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace teamlogic
