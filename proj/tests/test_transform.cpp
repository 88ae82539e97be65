#include "doctest.h"
#include "random_formulas.hpp"
#include "support.hpp"
#include "teamlogic/analysis.hpp"
#include "teamlogic/enumerate.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/prenex.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/transform.hpp"

using namespace teamlogic;
using testing::f;

namespace {

constexpr auto Strict = SemanticsMode::Strict;
constexpr auto Lax = SemanticsMode::Lax;

// Every team over `vars` on every structure of `vocab` with the given size.
template <typename Check>
void all_teams(const std::string& vocab, std::size_t size, const VariableList& vars, Check&& check) {
  for (const auto& m : enumerate_structures(Vocabulary::parse(vocab), size, size)) {
    TeamEnumerator teams(size, vars);
    while (auto x = teams.next()) check(m, *x);
  }
}

bool sentence_equivalent(const Formula& a, const Formula& b, const std::string& vocab, std::size_t max_size) {
  for (const auto& m : enumerate_structures(Vocabulary::parse(vocab), max_size)) {
    if (evaluate_sentence(m, a, Strict) != evaluate_sentence(m, b, Strict)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("renaming") {
  CHECK(rename_variable(f("inc(u;v)"), "u", "u1") == f("inc(u1;v)"));
  CHECK(rename_variable(f("dep(x;y)"), "y", "z") == f("dep(x;z)"));
  CHECK(rename_variable(f("E y. P(y)"), "y", "z") == f("E z. P(z)"));
  CHECK_THROWS_AS(rename_variable(f("E(x y)"), "x", "y"), UsageError);

  // Relabelling the team column alongside the formula preserves the verdict.
  const Structure m = testing::three_elements();
  for (const auto& text : {"inc(u;v)", "inc(u;v) | inc(w;v)", "dep(u;w) & u != v", "ind(v;u;w)"}) {
    TeamEnumerator teams(3, {"u", "v", "w"}, 4);
    while (auto x = teams.next()) {
      const Team relabelled({"t", "v", "w"}, x->rows());
      for (auto mode : {Strict, Lax}) {
        CHECK(evaluate(m, *x, f(text), mode) == evaluate(m, relabelled, rename_variable(f(text), "u", "t"), mode));
      }
    }
  }
}

TEST_CASE("relativization table") {
  CHECK(relativize({"a"}, f("inc(u;v)")) == f("inc(a u; a v)"));
  CHECK(relativize({"a"}, f("dep(;y)")) == f("dep(a;y)"));
  CHECK(relativize({"a", "b"}, f("ind(x;y;z) & P(x)")) == f("ind(a b x;y;z) & P(x)"));
}

TEST_CASE("relativization equals pointwise selection") {
  const std::vector<std::string> atoms{"dep(y;z)", "dep(;z)", "inc(y;z)", "inc(y z; z y)", "ind(;y;z)", "ind(z;y;y)"};
  for (const auto& text : atoms) {
    const Formula alpha = f(text);
    const Formula rel = relativize({"x"}, alpha);
    all_teams("", 2, {"x", "y", "z"}, [&](const Structure& m, const Team& x) {
      bool every = true;
      for (Element a = 0; a < 2; ++a) every = every && evaluate_atom(m, select(x, {"x"}, std::vector<Element>{a}), alpha);
      CHECK(evaluate_atom(m, x, rel) == every);
    });
  }
}

TEST_CASE("contraction") {
  CHECK(contract_independence(f("ind(x; y v; z)")) == f("ind(x v; y; z) & ind(x; v; z)"));
  CHECK(contract_independence(f("ind(x; y; z)")) == f("ind(x; y; z)"));
  CHECK(contract_independence(f("ind(; y; z w)")) == f("ind(w; y; z) & ind(; y; w)"));
  const Formula contracted = contract_independence(f("ind(; a b; c d) | P(a)"));
  const auto check_units = [](const Formula& g) {
    return map_leaves(g, [](const Formula& a) {
      if (a.kind() == FormulaKind::Ind) {
        CHECK(a.left_vars().size() <= 1);
        CHECK(a.right_vars().size() <= 1);
      }
      return a;
    });
  };
  check_units(contracted);

  for (const auto& text : {"ind(x; y v; z)", "ind(; y v; z)", "ind(x; y; z v)", "ind(; x y; z v)"}) {
    const Formula lhs = f(text);
    const Formula rhs = contract_independence(lhs);
    std::size_t teams = 0;
    all_teams("", 2, {"v", "x", "y", "z"}, [&](const Structure& m, const Team& x) {
      ++teams;
      CHECK(evaluate(m, x, lhs, Strict) == evaluate(m, x, rhs, Strict));
    });
    CHECK(teams == 65536);
  }
}

TEST_CASE("dependence as independence") {
  CHECK(dep_to_independence(f("dep(x;y)")) == f("ind(x; y; y)"));
  CHECK(dep_to_independence(f("dep(;y)")) == f("ind(; y; y)"));
  for (std::size_t n : {2, 3}) {
    all_teams("", n, {"x", "y"}, [&](const Structure& m, const Team& x) {
      for (const auto& text : {"dep(x;y)", "dep(;y)", "dep(y;x)"}) {
        CHECK(evaluate_atom(m, x, f(text)) == evaluate_atom(m, x, dep_to_independence(f(text))));
      }
    });
  }
}

TEST_CASE("variable normalization") {
  const Formula g = normalize_variables(f("(A x. P(x)) & (E x. Q(x)) & E y. x = y"));
  CHECK(classify_fragment(g).quantified_exactly_once);
  CHECK(free_variables(g) == VariableSet{"x"});
  CHECK(normalize_variables(f("A x. E y. E(x y)")) == f("A x. E y. E(x y)"));
}

TEST_CASE("prenex: conjunction example") {
  const Formula in = f("(A x. P(x)) & E z. Q(z)");
  const PrenexSentence p = to_prenex_normal_form(in);
  CHECK(p.to_formula() == f("A x. E z. (dep(;z) & (P(x) & Q(z)))"));
  CHECK(prenex_violations(p).empty());
  CHECK(sentence_equivalent(in, p.to_formula(), "P/1,Q/1", 3));
}

TEST_CASE("prenex: inclusion atom already in prenex form") {
  const Formula in = f("A x. E y. inc(y;x)");
  const PrenexSentence p = to_prenex_normal_form(in);
  CHECK(p.universals == VariableList{"x"});
  CHECK(p.existentials.front() == "y");
  CHECK(prenex_violations(p).empty());
  CHECK(sentence_equivalent(in, p.to_formula(), "", 3));
}

TEST_CASE("prenex: disjunction of existentials") {
  const Formula in = f("(E z. P(z)) | E w. Q(w)");
  const PrenexSentence p = to_prenex_normal_form(in);
  CHECK(p.universals.empty());
  CHECK(p.existentials.size() == 5);
  CHECK(std::find(p.chi.begin(), p.chi.end(), Formula::dep({}, p.existentials[1])) != p.chi.end());
  CHECK(prenex_violations(p).empty());
  CHECK(sentence_equivalent(in, p.to_formula(), "P/1,Q/1", 3));
}

TEST_CASE("prenex: padding keeps the outer scope in new dependence atoms") {
  // A universal on one side only forces the other side's witness to ignore it.
  const Formula in = f("A v. ((A x. P(x)) & E y. y = v)");
  const PrenexSentence p = to_prenex_normal_form(in);
  CHECK(prenex_violations(p).empty());
  CHECK(sentence_equivalent(in, p.to_formula(), "P/1", 3));
  // Conditioning the padded witness on the new universals alone is too strong.
  const Formula scope_free = f("A v. A x. E y. (dep(v;y) & dep(;y) & (P(x) & y = v))");
  CHECK_FALSE(sentence_equivalent(in, scope_free, "P/1", 2));
}

TEST_CASE("prenex: preconditions") {
  CHECK_THROWS_AS(to_prenex_normal_form(f("P(x)")), UsageError);
  CHECK_THROWS_AS(to_prenex_normal_form(f("(A x. P(x)) & E x. Q(x)")), UsageError);
  PrenexOptions opts;
  opts.normalize_variables = true;
  const Formula in = f("(A x. P(x)) & E x. Q(x)");
  const PrenexSentence p = to_prenex_normal_form(in, opts);
  CHECK(prenex_violations(p).empty());
  CHECK(sentence_equivalent(in, p.to_formula(), "P/1,Q/1", 3));
}

TEST_CASE("prenex: shape validator reports problems") {
  PrenexSentence bad;
  bad.universals = {"x"};
  bad.chi = {f("dep(;x)"), f("P(x)")};
  bad.theta = f("E y. P(y)");
  const auto problems = prenex_violations(bad);
  CHECK(problems.size() == 3);
}

TEST_CASE("prenex: random sentences stay equivalent") {
  testing::RandomFormulas gen(31);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const Formula in = gen.formula({}, 3);
    if (!free_variables(in).empty() || in.is_literal()) continue;
    CAPTURE(to_string(in));
    const PrenexSentence p = to_prenex_normal_form(in);
    CHECK(prenex_violations(p).empty());
    CHECK(p.universals.size() <= classify_fragment(in).universal_count);
    CHECK(sentence_equivalent(in, p.to_formula(), "P/1,E/2", 2));
    ++checked;
  }
  CHECK(checked > 10);
}
