#include <random>

#include "doctest.h"
#include "support.hpp"
#include "teamlogic/analysis.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/formula.hpp"

using namespace teamlogic;
using testing::f;

TEST_CASE("parse atoms and literals") {
  CHECK(f("inc(w; x)") == Formula::inc({"w"}, {"x"}));
  CHECK(f("dep(;x)") == Formula::dep({}, "x"));
  CHECK(f("ind(x; y v; z) & P(u)") ==
        Formula::conj(Formula::ind({"x"}, {"y", "v"}, {"z"}), Formula::literal(true, "P", {"u"})));
  CHECK(f("!E(x y)") == Formula::literal(false, "E", {"x", "y"}));
  CHECK(f("x != y") == Formula::equality("x", "y", false));
  CHECK(f("dep(x1 x2; y)") == Formula::dep({"x1", "x2"}, "y"));
}

TEST_CASE("precedence and associativity") {
  const Formula p = Formula::literal(true, "P", {"x"});
  const Formula q = Formula::literal(true, "Q", {"x"});
  const Formula r = Formula::literal(true, "R", {"x"});
  CHECK(f("P(x) | Q(x) & R(x)") == Formula::disj(p, Formula::conj(q, r)));
  CHECK(f("P(x) & Q(x) & R(x)") == Formula::conj(Formula::conj(p, q), r));
  CHECK(f("A x. P(x) & Q(x)") == Formula::conj(Formula::forall("x", p), q));
  CHECK(f("A x. (P(x) & Q(x))") == Formula::forall("x", Formula::conj(p, q)));
  CHECK(f("E x. A y. x = y") == Formula::exists("x", Formula::forall("y", Formula::equality("x", "y"))));
}

TEST_CASE("variables named A and E are not quantifiers") {
  CHECK(f("A = E") == Formula::equality("A", "E"));
  CHECK(f("E(A)") == Formula::literal(true, "E", {"A"}));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_formula("P(x) &\n  & Q(y)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_formula("inc(x y; z)"), ParseError);
  CHECK_THROWS_AS(parse_formula("!dep(x; y)"), ParseError);
  CHECK_THROWS_AS(parse_formula("P(x"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("P(x) Q(x)"), ParseError);
}

TEST_CASE("free variables") {
  CHECK(free_variables(f("inc(u;v) | inc(w;v)")) == VariableSet{"u", "v", "w"});
  CHECK(free_variables(f("A x. P(x)")).empty());
  CHECK(free_variables(f("E y. dep(x;y)")) == VariableSet{"x"});
  CHECK(free_variables(f("(E y. P(y)) & Q(y)")) == VariableSet{"y"});
}

TEST_CASE("subformula scope follows quantifiers") {
  const Formula s = f("A x. E y. dep(x; y)");
  CHECK(subformula_scope(s, {}).empty());
  CHECK(subformula_scope(s, {PathStep::Body, PathStep::Body}) == VariableList{"x", "y"});
  const Formula t = f("A x. (P(x) & E z. Q(z))");
  CHECK(subformula_scope(t, {PathStep::Body, PathStep::Lhs}) == VariableList{"x"});
  CHECK(subformula_scope(t, {PathStep::Body, PathStep::Rhs, PathStep::Body}) == VariableList{"x", "z"});
  CHECK_THROWS_AS(subformula_scope(t, {PathStep::Lhs}), UsageError);
}

TEST_CASE("non-conditional variables") {
  CHECK(nonconditional_variables(f("dep(x1 x2; y)")) == VariableList{"y"});
  CHECK(nonconditional_variables(f("ind(x; y; z)")) == VariableList{"y", "z"});
  CHECK(nonconditional_variables(f("inc(u v; w w)")) == VariableList{"u", "v", "w"});
  CHECK_THROWS_AS(nonconditional_variables(f("P(x)")), UsageError);
}

TEST_CASE("fragment classification") {
  const auto p = classify_fragment(f("A x. A y. E z. inc(x z; x y)"));
  CHECK(p.universal_count == 2);
  CHECK(p.existential_count == 1);
  CHECK(p.max_inc_width == 2);
  CHECK(p.is_sentence);
  CHECK(p.quantified_exactly_once);
  CHECK(p.in_universal_fragment(2));
  CHECK_FALSE(p.in_universal_fragment(1));

  CHECK(classify_fragment(f("ind(; x; y)")).max_ind_distinct_vars == 1);
  CHECK(classify_fragment(f("ind(; x; x)")).max_ind_distinct_vars == 0);
  CHECK(classify_fragment(f("ind(z; x y; w)")).max_ind_distinct_vars == 3);
  CHECK(classify_fragment(f("dep(a b; c)")).max_dep_condition_arity == 2);

  const auto open = classify_fragment(f("E x. P(y)"));
  CHECK_FALSE(open.is_sentence);
  CHECK(open.quantified_exactly_once);
  CHECK_FALSE(classify_fragment(f("(E x. P(x)) & Q(x)")).quantified_exactly_once);
  CHECK_FALSE(classify_fragment(f("A x. P(x) & E x. Q(x)")).quantified_exactly_once);
}

TEST_CASE("fresh variables") {
  CHECK(fresh_variable({"x", "y"}) == "x_0");
  CHECK(fresh_variable({"x_0", "x"}) == "x_1");
  CHECK(fresh_variable({}) == "x_0");
  NameSupply names({"a_0"});
  CHECK(names.fresh("a") == "a_1");
  CHECK(names.fresh("a") == "a_2");
}

namespace {

// Independent random AST builder, bypassing the parser.
Formula random_formula(std::mt19937_64& rng, int depth) {
  const VariableList pool{"x", "y", "z", "A", "E_1"};
  auto var = [&] { return pool[rng() % pool.size()]; };
  auto vars = [&](std::size_t max) {
    VariableList out(rng() % (max + 1));
    for (auto& v : out) v = var();
    return out;
  };
  const auto pick = depth == 0 ? rng() % 5 : rng() % 9;
  switch (pick) {
    case 0:
      return Formula::literal(rng() % 2, rng() % 2 ? "P" : "E", vars(2));
    case 1:
      return Formula::equality(var(), var(), rng() % 2);
    case 2:
      return Formula::dep(vars(2), var());
    case 3:
      return Formula::ind(vars(1), vars(2), vars(2));
    case 4: {
      auto l = vars(2);
      VariableList r(l.size());
      for (auto& v : r) v = var();
      return Formula::inc(l, r);
    }
    case 5:
      return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6:
      return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 7:
      return Formula::exists(var(), random_formula(rng, depth - 1));
    default:
      return Formula::forall(var(), random_formula(rng, depth - 1));
  }
}

VariableSet naive_free(const Formula& g) {
  switch (g.kind()) {
    case FormulaKind::Literal: {
      const auto& a = g.arguments();
      return {a.begin(), a.end()};
    }
    case FormulaKind::Dep: {
      VariableSet s(g.condition().begin(), g.condition().end());
      s.insert(g.determined());
      return s;
    }
    case FormulaKind::Ind: {
      VariableSet s(g.condition().begin(), g.condition().end());
      s.insert(g.left_vars().begin(), g.left_vars().end());
      s.insert(g.right_vars().begin(), g.right_vars().end());
      return s;
    }
    case FormulaKind::Inc: {
      VariableSet s(g.left_vars().begin(), g.left_vars().end());
      s.insert(g.right_vars().begin(), g.right_vars().end());
      return s;
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      auto s = naive_free(g.lhs());
      auto t = naive_free(g.rhs());
      s.insert(t.begin(), t.end());
      return s;
    }
    default: {
      auto s = naive_free(g.body());
      s.erase(g.bound());
      return s;
    }
  }
}

}  // namespace

TEST_CASE("print then parse is the identity on random trees") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Formula g = random_formula(rng, 4);
    const std::string text = to_string(g);
    CAPTURE(text);
    CHECK(parse_formula(text) == g);
    CHECK(free_variables(g) == naive_free(g));
  }
}

TEST_CASE("scope grows monotonically along paths") {
  const Formula s = f("A x. (E y. (P(y) | A z. dep(x y; z)) & Q(x))");
  const SubformulaPath deepest{PathStep::Body, PathStep::Lhs, PathStep::Body, PathStep::Rhs, PathStep::Body};
  VariableSet previous;
  for (std::size_t len = 0; len <= deepest.size(); ++len) {
    SubformulaPath p(deepest.begin(), deepest.begin() + static_cast<long>(len));
    const auto scope = subformula_scope(s, p);
    const VariableSet current(scope.begin(), scope.end());
    CHECK(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
    previous = current;
  }
  CHECK(previous == VariableSet{"x", "y", "z"});
}
