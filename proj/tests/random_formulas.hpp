#pragma once

// Small seeded formula generator for differential tests.

#include <random>
#include <string>
#include <vector>

#include "teamlogic/formula.hpp"

namespace testing {

struct RandomFormulas {
  std::mt19937_64 rng;
  bool atoms = true;
  bool only_dep = false;

  explicit RandomFormulas(std::uint64_t seed) : rng(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  teamlogic::Variable pick(const teamlogic::VariableList& scope) { return scope[below(scope.size())]; }

  teamlogic::VariableList picks(const teamlogic::VariableList& scope, std::size_t max) {
    teamlogic::VariableList out(below(max + 1));
    for (auto& v : out) v = pick(scope);
    return out;
  }

  teamlogic::Formula leaf(const teamlogic::VariableList& scope) {
    using teamlogic::Formula;
    const std::size_t kinds = atoms ? (only_dep ? 4 : 6) : 3;
    switch (below(kinds)) {
      case 0:
        return Formula::literal(below(2) == 0, "P", {pick(scope)});
      case 1:
        return Formula::literal(below(2) == 0, "E", {pick(scope), pick(scope)});
      case 2:
        return Formula::equality(pick(scope), pick(scope), below(2) == 0);
      case 3:
        return Formula::dep(picks(scope, 2), pick(scope));
      case 4: {
        auto l = picks(scope, 2);
        teamlogic::VariableList r(l.size());
        for (auto& v : r) v = pick(scope);
        return Formula::inc(l, r);
      }
      default:
        return Formula::ind(picks(scope, 1), picks(scope, 2), picks(scope, 1));
    }
  }

  /// Formula over the free variables in `scope`, binding names q0, q1, ...
  teamlogic::Formula formula(teamlogic::VariableList scope, int depth, int& next_bound) {
    using teamlogic::Formula;
    if (!scope.empty() && (depth <= 0 || below(4) == 0)) return leaf(scope);
    switch (scope.empty() ? 2 : below(4)) {
      case 0:
        return Formula::conj(formula(scope, depth - 1, next_bound), formula(scope, depth - 1, next_bound));
      case 1:
        return Formula::disj(formula(scope, depth - 1, next_bound), formula(scope, depth - 1, next_bound));
      default: {
        const std::string v = "q" + std::to_string(next_bound++);
        const bool universal = below(2) == 0;
        scope.push_back(v);
        Formula body = formula(scope, depth - 1, next_bound);
        return universal ? Formula::forall(v, body) : Formula::exists(v, body);
      }
    }
  }

  teamlogic::Formula formula(const teamlogic::VariableList& scope, int depth) {
    int next = 0;
    return formula(scope, depth, next);
  }
};

}  // namespace testing
