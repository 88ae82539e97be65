#include "doctest.h"
#include "support.hpp"
#include "teamlogic/analysis.hpp"
#include "teamlogic/corpus.hpp"
#include "teamlogic/enumerate.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/oracle.hpp"
#include "teamlogic/semantics.hpp"

using namespace teamlogic;
using testing::f;

namespace {

constexpr auto Strict = SemanticsMode::Strict;
constexpr auto Lax = SemanticsMode::Lax;

bool atom_kind_allowed(const Formula& g, const std::set<AtomKind>& atoms) {
  switch (g.kind()) {
    case FormulaKind::Literal: return atoms.count(AtomKind::FirstOrder) != 0;
    case FormulaKind::Dep: return atoms.count(AtomKind::Dep) != 0;
    case FormulaKind::Ind: return atoms.count(AtomKind::Ind) != 0;
    case FormulaKind::Inc: return atoms.count(AtomKind::Inc) != 0;
    case FormulaKind::And:
    case FormulaKind::Or: return atom_kind_allowed(g.lhs(), atoms) && atom_kind_allowed(g.rhs(), atoms);
    case FormulaKind::Exists:
    case FormulaKind::Forall: return atom_kind_allowed(g.body(), atoms);
  }
  return false;
}

}  // namespace

TEST_CASE("sentence equivalence") {
  const Vocabulary vocab = Vocabulary::parse("P/1,E/2");
  const auto same = check_sentence_equivalence(f("A x. E y. E(x y)"), f("A z. E w. E(z w)"), vocab, Strict);
  CHECK(same.verdict == EquivalenceVerdict::EquivalentUpToBound);
  CHECK(same.equivalent());
  CHECK(same.structures_tested == StructureEnumerator::count_for_size(vocab, 2) +
                                      StructureEnumerator::count_for_size(vocab, 3));

  const auto differ = check_sentence_equivalence(f("A x. E y. E(x y)"), f("E y. A x. E(x y)"), vocab, Strict);
  REQUIRE(differ.verdict == EquivalenceVerdict::Counterexample);
  const Counterexample& c = *differ.counterexample;
  CHECK_FALSE(c.team);
  CHECK(c.lhs != c.rhs);
  // Replaying the stored structure reproduces the recorded values.
  CHECK(evaluate_sentence(c.structure, f("A x. E y. E(x y)"), Strict) == c.lhs);
  CHECK(evaluate_sentence(c.structure, f("E y. A x. E(x y)"), Strict) == c.rhs);
  CHECK(to_string(differ).find("counterexample structure") != std::string::npos);
  CHECK(to_key_values(differ).find("verdict=counterexample\n") != std::string::npos);

  CHECK_THROWS_AS(check_sentence_equivalence(f("P(x)"), f("P(x)"), vocab, Strict), UsageError);
  CHECK_THROWS_AS(check_sentence_equivalence(f("A x. Q(x)"), f("A x. Q(x)"), vocab, Strict), UsageError);
}

TEST_CASE("open equivalence") {
  const Vocabulary empty;
  const auto report = check_open_equivalence(f("inc(u; v) | inc(w; v)"), f("inc(u w; v v)"), empty, Lax,
                                             OracleBounds{2, 2, 4, 4});
  REQUIRE(report.verdict == EquivalenceVerdict::Counterexample);
  const auto& c = *report.counterexample;
  REQUIRE(c.team);
  CHECK(evaluate(c.structure, *c.team, f("inc(u; v) | inc(w; v)"), Lax) == c.lhs);
  CHECK(evaluate(c.structure, *c.team, f("inc(u w; v v)"), Lax) == c.rhs);

  const auto dep = check_open_equivalence(f("dep(a; b)"), f("ind(a; b; b)"), empty, Strict, OracleBounds{2, 3});
  CHECK(dep.equivalent());
  CHECK(dep.teams_tested == (std::uint64_t{1} << 4) + (std::uint64_t{1} << 9));

  // Self-consistency: every formula is equivalent to itself.
  CorpusSpec spec;
  spec.count = 20;
  spec.free_variables = {"u", "v"};
  spec.max_variables = 3;
  for (const auto& g : generate_corpus(spec)) {
    CHECK(check_open_equivalence(g, g, spec.vocabulary, Strict, OracleBounds{2, 2, 3}).verdict !=
          EquivalenceVerdict::Counterexample);
  }
  CHECK_THROWS_AS(check_open_equivalence(f("P(a) & P(b) & P(c)"), f("P(d) & P(e)"), Vocabulary::parse("P/1"), Strict),
                  UsageError);
}

TEST_CASE("limits give inconclusive verdicts") {
  EvalLimits tiny;
  tiny.max_split_candidates = 1;
  const auto report =
      check_open_equivalence(f("inc(u; v) | inc(v; u)"), f("inc(u; v) | inc(v; u)"), Vocabulary{}, Strict,
                             OracleBounds{3, 3}, tiny);
  CHECK(report.verdict == EquivalenceVerdict::Inconclusive);
  CHECK_FALSE(report.message.empty());
}

TEST_CASE("corpus generator") {
  CorpusSpec spec;
  spec.seed = 7;
  spec.count = 50;
  spec.free_variables = {"u", "v", "w"};
  spec.max_variables = 4;
  spec.max_depth = 3;
  const auto a = generate_corpus(spec);
  const auto b = generate_corpus(spec);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  spec.seed = 8;
  const auto c = generate_corpus(spec);
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) differing += a[i] == c[i] ? 0 : 1;
  CHECK(differing > 0);

  for (const auto& g : a) {
    CHECK(formula_depth(g) <= 3);
    CHECK(classify_fragment(g).quantified_exactly_once);
    CHECK(g.all_variables().size() <= 4);
    for (const auto& v : free_variables(g)) CHECK((v == "u" || v == "v" || v == "w"));
  }

  CorpusSpec fo;
  fo.atoms = {AtomKind::FirstOrder};
  fo.vocabulary = Vocabulary::parse("P/1,Q/1");
  fo.free_variables = {"u", "v"};
  fo.count = 40;
  for (const auto& g : generate_corpus(fo)) {
    CHECK(is_first_order(g));
    CHECK(atom_kind_allowed(g, fo.atoms));
  }

  CorpusSpec sentences;
  sentences.count = 40;
  sentences.max_universals = 2;
  for (const auto& g : generate_corpus(sentences)) {
    const FragmentProfile p = classify_fragment(g);
    CHECK(p.is_sentence);
    CHECK(p.universal_count <= 2);
  }

  CorpusSpec normal;
  normal.shape = CorpusShape::ForallExists;
  normal.count = 40;
  normal.max_existentials = 2;
  normal.max_independence = 1;
  for (const auto& g : generate_corpus(normal)) {
    const FragmentProfile p = classify_fragment(g);
    CHECK(p.is_sentence);
    CHECK(p.universal_count <= 2);
    CHECK(p.existential_count <= 2);
    CHECK(p.ind_atoms <= 1);
    Formula body = g;
    while (body.kind() == FormulaKind::Forall) body = body.body();
    while (body.kind() == FormulaKind::Exists) body = body.body();
    CHECK(is_quantifier_free(body));
  }
}

TEST_CASE("documented oracle examples") {
  const Formula mixed = f("(A x. P(x)) & E z. Q(z)");
  const Formula prenex = f("A x. E z. (P(x) & Q(z))");
  CHECK(check_sentence_equivalence(mixed, prenex, Vocabulary::parse("P/1,Q/1"), Strict).equivalent());

  const Formula inside = f("A x. (inc(w; x) & (inc(u; v) | inc(w; v)))");
  const Formula outside = f("(A x. inc(w; x)) & (inc(u; v) | inc(w; v))");
  const auto report = check_open_equivalence(inside, outside, Vocabulary{}, Strict, OracleBounds{3, 3, 3});
  CHECK(report.verdict == EquivalenceVerdict::Counterexample);
  CHECK(evaluate(testing::three_elements(), testing::uvw_team(), inside, Strict));
  CHECK_FALSE(evaluate(testing::three_elements(), testing::uvw_team(), outside, Strict));

  CHECK(check_open_equivalence(f("inc(u; v)"), f("inc(v; u)"), Vocabulary{}, Strict).verdict ==
        EquivalenceVerdict::Counterexample);
  CHECK(check_open_equivalence(f("ind(a; b c; d)"), f("ind(a c; b; d) & ind(a; c; d)"), Vocabulary{}, Strict,
                               OracleBounds{2, 2})
            .equivalent());
}
