#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/structure.hpp"

namespace teamlogic {

enum class AtomKind { FirstOrder, Dep, Ind, Inc };

enum class CorpusShape {
  /// Arbitrary nesting of connectives and quantifiers.
  Free,
  /// forall x1..xk exists y1..ym chi with chi quantifier-free and unit ind atoms.
  ForallExists,
};

struct CorpusSpec {
  Vocabulary vocabulary = Vocabulary::parse("P/1,E/2");
  /// Nesting bound on connectives and quantifiers; atoms have depth 0. For
  /// ForallExists it bounds the quantifier-free part.
  std::size_t max_depth = 3;
  std::set<AtomKind> atoms{AtomKind::FirstOrder, AtomKind::Dep, AtomKind::Ind, AtomKind::Inc};
  std::size_t max_universals = 2;
  std::size_t max_existentials = std::numeric_limits<std::size_t>::max();
  /// Free and bound variables together.
  std::size_t max_variables = std::numeric_limits<std::size_t>::max();
  std::size_t max_independence = std::numeric_limits<std::size_t>::max();
  std::uint64_t seed = 0;
  std::size_t count = 100;
  /// Nonempty: open formulas whose free variables are among these.
  VariableList free_variables;
  CorpusShape shape = CorpusShape::Free;
  bool equality = true;
};

/// Seeded stream of formulas. Every bound variable gets a fresh name, so each
/// formula is quantified exactly once.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(CorpusSpec spec);
  Formula next();
  const CorpusSpec& spec() const { return spec_; }

 private:
  struct Budget {
    std::size_t universals = 0;
    std::size_t existentials = 0;
    std::size_t independence = 0;
    std::size_t variables = 0;
    std::size_t counter = 0;
  };

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  Formula free_formula(std::size_t depth, VariableList scope, Budget& budget);
  Formula forall_exists(Budget& budget);
  Formula quantifier_free(std::size_t depth, const VariableList& scope, Budget& budget);
  Formula leaf(const VariableList& scope, Budget& budget);
  Variable fresh(Budget& budget);

  CorpusSpec spec_;
  std::mt19937_64 rng_;
};

std::vector<Formula> generate_corpus(const CorpusSpec& spec);

/// Nesting depth of connectives and quantifiers.
std::size_t formula_depth(const Formula& formula);

}  // namespace teamlogic
