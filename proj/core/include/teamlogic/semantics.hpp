#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "teamlogic/analysis.hpp"
#include "teamlogic/formula.hpp"
#include "teamlogic/structure.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

enum class SemanticsMode { Strict, Lax };

std::string to_string(SemanticsMode mode);
/// Accepts "strict" and "lax"; throws UsageError otherwise.
SemanticsMode parse_semantics_mode(const std::string& name);

/// Cumulative search budgets for one evaluation. Exceeding any of them throws
/// LimitExceeded; an unset field is unlimited.
struct EvalLimits {
  /// Disjunction covers tried, summed over all disjunction nodes.
  std::optional<std::uint64_t> max_split_candidates;
  /// Existential witness steps: whole functions for the definitional search,
  /// single cell choices for the block solver.
  std::optional<std::uint64_t> max_witness_functions;
  /// Largest team that may be built during the evaluation.
  std::optional<std::uint64_t> max_team_rows;

  static EvalLimits unlimited() { return {}; }
};

struct EvalOptions {
  /// Evaluate first-order subformulas pointwise instead of by team search.
  bool flatness_shortcut = false;
  /// Solve maximal strict existential blocks as one constraint search over the
  /// witness table instead of nesting definitional searches.
  bool block_search = true;
  /// Dependence-logic subformulas are closed under subteams, so their
  /// disjunctions are split row by row with pruning (partitions only, in both
  /// modes) and their lax existentials try single-valued witnesses only.
  bool downward_closed_search = true;
  bool record_trace = false;
};

/// One witness choice made at a disjunction or existential occurrence.
struct TraceEntry {
  SubformulaPath path;
  FormulaKind kind = FormulaKind::Or;
  Team input;
  /// Disjunction: the part Y for the left disjunct. Existential: the extended team.
  Team first;
  /// Disjunction: the part Z for the right disjunct. Unused for existentials.
  Team second;
};

/// Witness record of a successful evaluation, keyed by occurrence and input team.
struct EvalTrace {
  std::vector<TraceEntry> entries;

  /// The entry chosen for `path` on `input`, if any.
  const TraceEntry* find(const SubformulaPath& path, const Team& input) const;
};

struct EvalStats {
  std::uint64_t split_candidates = 0;
  std::uint64_t witness_steps = 0;
  std::uint64_t max_team_rows = 0;
};

struct EvalResult {
  bool verdict = false;
  std::optional<EvalTrace> trace;
  EvalStats stats;
  std::vector<std::string> warnings;
};

/// Does M satisfy φ on the team X? Free variables of φ must be bound by X or
/// name constants of M. Throws LimitExceeded when a budget runs out.
bool evaluate(const Structure& structure, const Team& team, const Formula& formula, SemanticsMode mode,
              const EvalLimits& limits = {}, const EvalOptions& options = {});

EvalResult evaluate_detailed(const Structure& structure, const Team& team, const Formula& formula,
                             SemanticsMode mode, const EvalLimits& limits = {}, const EvalOptions& options = {});

/// Truth of a sentence: evaluation on the team {∅}.
bool evaluate_sentence(const Structure& structure, const Formula& sentence, SemanticsMode mode,
                       const EvalLimits& limits = {}, const EvalOptions& options = {});

/// Direct check of a dep, ind or inc atom against its definition.
bool evaluate_atom(const Structure& structure, const Team& team, const Formula& atom);

/// Pointwise Tarski evaluation of a first-order formula on every row of X.
/// Throws UsageError if the formula contains a dependency atom.
bool check_flatness_shortcut(const Structure& structure, const Team& team, const Formula& formula);

/// Re-derives the verdict from the recorded choices alone, without search.
/// Returns false if the trace is missing a needed choice or a choice is invalid.
bool replay_trace(const Structure& structure, const Team& team, const Formula& formula, SemanticsMode mode,
                  const EvalTrace& trace);

std::ostream& operator<<(std::ostream& out, const EvalTrace& trace);

}  // namespace teamlogic
