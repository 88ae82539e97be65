#include <benchmark/benchmark.h>

#include "teamlogic/enumerate.hpp"
#include "teamlogic/eso.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/prenex.hpp"
#include "teamlogic/semantics.hpp"

using namespace teamlogic;

namespace {

Team full_team(std::size_t n, const VariableList& vars, std::size_t rows) {
  auto tuples = all_tuples(n, vars.size());
  tuples.resize(std::min(rows, tuples.size()));
  return Team(vars, tuples);
}

void BM_Parse(benchmark::State& state) {
  const std::string text = "A x. E y. (dep(x; y) & (inc(u v; x y) | ind(u; v; w)) & !E(x y) & (P(x) | x = y))";
  for (auto _ : state) benchmark::DoNotOptimize(parse_formula(text));
}
BENCHMARK(BM_Parse);

void BM_DisjunctionSplit(benchmark::State& state, SemanticsMode mode) {
  const Structure m(3);
  const Team x = full_team(3, {"u", "v", "w"}, static_cast<std::size_t>(state.range(0)));
  const Formula f = parse_formula("inc(u; v) | inc(w; v) & dep(u; w)");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(m, x, f, mode));
}
BENCHMARK_CAPTURE(BM_DisjunctionSplit, strict, SemanticsMode::Strict)->DenseRange(3, 9, 3);
BENCHMARK_CAPTURE(BM_DisjunctionSplit, lax, SemanticsMode::Lax)->DenseRange(3, 6, 3);

void BM_ExistentialBlocks(benchmark::State& state) {
  Structure m(static_cast<std::size_t>(state.range(0)));
  m.add_relation("E", 2);
  for (Element a = 0; a < m.size(); ++a) m.add_tuple("E", {a, static_cast<Element>((a + 1) % m.size())});
  const Formula f = parse_formula("A x. A y. E z. E t. (dep(x; z) & E(x z) & inc(z; y) & t != z)");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_sentence(m, f, SemanticsMode::Strict));
}
BENCHMARK(BM_ExistentialBlocks)->DenseRange(2, 4, 1);

void BM_Prenex(benchmark::State& state) {
  const Formula f = parse_formula("A x. (P(x) | E y. (E(x y) & dep(x; y))) & E z. A w. (inc(z; w) | !E(z w))");
  for (auto _ : state) benchmark::DoNotOptimize(to_prenex_normal_form(f));
}
BENCHMARK(BM_Prenex);

void BM_EsoSearch(benchmark::State& state) {
  const EsoSentence s = parse_eso("exists f/1 g/1 . forall x . g(f(x)) = x & E(x, f(x)) & (P(g(x)) -> P(x))");
  const auto structures = enumerate_structures(Vocabulary::parse("P/1,E/2"), 3, 3);
  for (auto _ : state) {
    std::size_t trues = 0;
    for (const auto& m : structures) trues += evaluate_eso(m, s) ? 1 : 0;
    benchmark::DoNotOptimize(trues);
  }
}
BENCHMARK(BM_EsoSearch)->Unit(benchmark::kMillisecond);

void BM_InclusionTranslation(benchmark::State& state) {
  const EsoSentence s = parse_eso("exists f/1 g/1 . forall x . g(f(x)) = x & E(x, f(x)) & (P(g(x)) -> P(x))");
  const Formula tau = eso_to_inclusion(s);
  const auto structures = enumerate_structures(Vocabulary::parse("P/1,E/2"), 3, 3);
  for (auto _ : state) {
    std::size_t trues = 0;
    for (const auto& m : structures) trues += evaluate_sentence(m, tau, SemanticsMode::Strict) ? 1 : 0;
    benchmark::DoNotOptimize(trues);
  }
}
BENCHMARK(BM_InclusionTranslation)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
