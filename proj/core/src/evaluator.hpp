#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "teamlogic/semantics.hpp"

namespace teamlogic::detail {

/// A name resolved against a row layout: a column index or a constant value.
struct ValueRef {
  bool constant = false;
  std::size_t index = 0;  // column, or the constant's element

  Element of(const Element* row) const { return constant ? static_cast<Element>(index) : row[index]; }
};

/// Resolves `vars` against team columns first, then structure constants.
std::vector<ValueRef> resolve(const Team& team, const Structure& structure, const VariableList& vars);

class Evaluator {
 public:
  Evaluator(const Structure& structure, SemanticsMode mode, const EvalLimits& limits, const EvalOptions& options);

  /// Evaluates the occurrence at the current path.
  bool eval(const Formula& formula, const Team& team);

  void push(PathStep step) { path_.push_back(step); }
  void pop() { path_.pop_back(); }

  const EvalStats& stats() const { return stats_; }
  /// Records a team size; throws LimitExceeded above max_team_rows.
  void note_rows(std::size_t rows);
  std::vector<TraceEntry>& trace() { return trace_; }

 private:
  friend class BlockSearch;

  bool eval_or_strict(const Formula& f, const Team& team);
  bool eval_or_lax(const Formula& f, const Team& team);
  bool eval_or_pruned(const Formula& f, const Team& team);
  /// Evaluates a child occurrence without keeping its trace entries.
  bool holds_on(const Formula& f, PathStep step, const Team& team);
  bool eval_exists_strict(const Formula& f, const Team& team);
  bool eval_exists_lax(const Formula& f, const Team& team);
  bool eval_block(const Formula& f, const Team& team);
  bool split_and_eval(const Formula& f, const Team& team, const std::vector<bool>& in_left,
                      const std::vector<bool>& in_right);

  bool first_order(const Formula& f);
  bool downward_closed(const Formula& f);
  void count_split();
  void count_witness(std::uint64_t steps = 1);
  void record(FormulaKind kind, const Team& input, Team first, Team second = {});
  void truncate(std::size_t size) { if (options_.record_trace) trace_.resize(size); }

  const Structure& structure_;
  SemanticsMode mode_;
  EvalLimits limits_;
  EvalOptions options_;
  EvalStats stats_;
  SubformulaPath path_;
  std::vector<TraceEntry> trace_;
  std::unordered_map<const void*, bool> first_order_cache_;
  std::unordered_map<const void*, bool> dependence_cache_;
};

bool literal_on_team(const Structure& structure, const Team& team, const Formula& literal);

}  // namespace teamlogic::detail
