#include "teamlogic/semantics.hpp"

#include <functional>
#include <map>
#include <set>

#include "evaluator.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/tarski.hpp"

namespace teamlogic {

std::string to_string(SemanticsMode mode) { return mode == SemanticsMode::Strict ? "strict" : "lax"; }

SemanticsMode parse_semantics_mode(const std::string& name) {
  if (name == "strict") return SemanticsMode::Strict;
  if (name == "lax") return SemanticsMode::Lax;
  throw UsageError("unknown semantics '" + name + "' (expected strict or lax)");
}

namespace detail {

std::vector<ValueRef> resolve(const Team& team, const Structure& structure, const VariableList& vars) {
  std::vector<ValueRef> refs;
  refs.reserve(vars.size());
  for (const auto& v : vars) {
    if (auto col = team.column(v)) {
      refs.push_back({false, *col});
    } else if (auto c = structure.constant(v)) {
      refs.push_back({true, *c});
    } else {
      throw UsageError("variable " + v + " is not in the team domain");
    }
  }
  return refs;
}

bool literal_on_team(const Structure& structure, const Team& team, const Formula& literal) {
  const auto refs = resolve(team, structure, literal.arguments());
  const bool equality = literal.is_equality();
  Tuple tuple(refs.size());
  for (const auto& row : team.rows()) {
    bool value;
    if (equality) {
      value = refs[0].of(row.data()) == refs[1].of(row.data());
    } else {
      for (std::size_t i = 0; i < refs.size(); ++i) tuple[i] = refs[i].of(row.data());
      value = structure.holds(literal.predicate(), tuple);
    }
    if (value != literal.positive()) return false;
  }
  return true;
}

namespace {

Tuple pick(const Tuple& row, const std::vector<ValueRef>& refs) {
  Tuple out(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) out[i] = refs[i].of(row.data());
  return out;
}

bool dep_holds(const Structure& m, const Team& team, const Formula& atom) {
  const auto cond = resolve(team, m, atom.condition());
  const auto det = resolve(team, m, {atom.determined()})[0];
  std::map<Tuple, Element> seen;
  for (const auto& row : team.rows()) {
    auto [it, inserted] = seen.emplace(pick(row, cond), det.of(row.data()));
    if (!inserted && it->second != det.of(row.data())) return false;
  }
  return true;
}

bool inc_holds(const Structure& m, const Team& team, const Formula& atom) {
  const auto left = resolve(team, m, atom.left_vars());
  const auto right = resolve(team, m, atom.right_vars());
  std::set<Tuple> targets;
  for (const auto& row : team.rows()) targets.insert(pick(row, right));
  for (const auto& row : team.rows()) {
    if (!targets.count(pick(row, left))) return false;
  }
  return true;
}

bool ind_holds(const Structure& m, const Team& team, const Formula& atom) {
  const auto cond = resolve(team, m, atom.condition());
  const auto left = resolve(team, m, atom.left_vars());
  const auto right = resolve(team, m, atom.right_vars());
  std::set<Tuple> present;
  for (const auto& row : team.rows()) {
    Tuple t = pick(row, cond);
    for (const auto& r : left) t.push_back(r.of(row.data()));
    for (const auto& r : right) t.push_back(r.of(row.data()));
    present.insert(std::move(t));
  }
  for (const auto& s : team.rows()) {
    const Tuple sc = pick(s, cond);
    for (const auto& s2 : team.rows()) {
      if (pick(s2, cond) != sc) continue;
      Tuple t = sc;
      for (const auto& r : left) t.push_back(r.of(s.data()));
      for (const auto& r : right) t.push_back(r.of(s2.data()));
      if (!present.count(t)) return false;
    }
  }
  return true;
}

// Advances a mixed-radix counter; false once it wraps to all zeros.
bool step_counter(std::vector<std::uint32_t>& digits, std::uint32_t radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

}  // namespace

Evaluator::Evaluator(const Structure& structure, SemanticsMode mode, const EvalLimits& limits,
                     const EvalOptions& options)
    : structure_(structure), mode_(mode), limits_(limits), options_(options) {}

bool Evaluator::downward_closed(const Formula& f) {
  auto [it, inserted] = dependence_cache_.emplace(f.id(), false);
  if (inserted) it->second = is_dependence_only(f);
  return it->second;
}

bool Evaluator::first_order(const Formula& f) {
  auto [it, inserted] = first_order_cache_.emplace(f.id(), false);
  if (inserted) it->second = is_first_order(f);
  return it->second;
}

void Evaluator::count_split() {
  ++stats_.split_candidates;
  if (limits_.max_split_candidates && stats_.split_candidates > *limits_.max_split_candidates) {
    throw LimitExceeded("split candidate limit of " + std::to_string(*limits_.max_split_candidates) +
                        " exceeded");
  }
}

void Evaluator::count_witness(std::uint64_t steps) {
  stats_.witness_steps += steps;
  if (limits_.max_witness_functions && stats_.witness_steps > *limits_.max_witness_functions) {
    throw LimitExceeded("witness limit of " + std::to_string(*limits_.max_witness_functions) + " exceeded");
  }
}

void Evaluator::note_rows(std::size_t rows) {
  if (rows > stats_.max_team_rows) stats_.max_team_rows = rows;
  if (limits_.max_team_rows && rows > *limits_.max_team_rows) {
    throw LimitExceeded("team of " + std::to_string(rows) + " rows exceeds the limit of " +
                        std::to_string(*limits_.max_team_rows));
  }
}

void Evaluator::record(FormulaKind kind, const Team& input, Team first, Team second) {
  if (!options_.record_trace) return;
  trace_.push_back({path_, kind, input, std::move(first), std::move(second)});
}

bool Evaluator::eval(const Formula& f, const Team& team) {
  if (options_.flatness_shortcut && !f.is_literal() && first_order(f)) {
    return check_flatness_shortcut(structure_, team, f);
  }
  switch (f.kind()) {
    case FormulaKind::Literal:
      return literal_on_team(structure_, team, f);
    case FormulaKind::Dep:
    case FormulaKind::Ind:
    case FormulaKind::Inc:
      return evaluate_atom(structure_, team, f);
    case FormulaKind::And: {
      const std::size_t mark = trace_.size();
      push(PathStep::Lhs);
      bool ok = eval(f.lhs(), team);
      pop();
      if (ok) {
        push(PathStep::Rhs);
        ok = eval(f.rhs(), team);
        pop();
      }
      if (!ok) truncate(mark);
      return ok;
    }
    case FormulaKind::Or:
      if (options_.downward_closed_search && downward_closed(f)) return eval_or_pruned(f, team);
      return mode_ == SemanticsMode::Strict ? eval_or_strict(f, team) : eval_or_lax(f, team);
    case FormulaKind::Exists:
      if (mode_ == SemanticsMode::Lax) {
        if (options_.downward_closed_search && downward_closed(f.body())) return eval_exists_strict(f, team);
        return eval_exists_lax(f, team);
      }
      return options_.block_search ? eval_block(f, team) : eval_exists_strict(f, team);
    case FormulaKind::Forall: {
      Team extended = universal_extension(team, f.bound(), structure_);
      note_rows(extended.size());
      push(PathStep::Body);
      const bool ok = eval(f.body(), extended);
      pop();
      return ok;
    }
  }
  return false;
}

bool Evaluator::split_and_eval(const Formula& f, const Team& team, const std::vector<bool>& in_left,
                               const std::vector<bool>& in_right) {
  count_split();
  const std::size_t mark = trace_.size();
  Team left = team.subteam(in_left);
  push(PathStep::Lhs);
  bool ok = eval(f.lhs(), left);
  pop();
  if (ok) {
    Team right = team.subteam(in_right);
    push(PathStep::Rhs);
    ok = eval(f.rhs(), right);
    pop();
    if (ok) {
      record(FormulaKind::Or, team, std::move(left), std::move(right));
      return true;
    }
  }
  truncate(mark);
  return false;
}

bool Evaluator::eval_or_strict(const Formula& f, const Team& team) {
  const std::size_t n = team.size();
  if (n >= 63) throw LimitExceeded("team too large for split enumeration");
  std::vector<bool> left(n), right(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      left[i] = (mask >> i) & 1U;
      right[i] = !left[i];
    }
    if (split_and_eval(f, team, left, right)) return true;
  }
  return false;
}

bool Evaluator::holds_on(const Formula& f, PathStep step, const Team& team) {
  const std::size_t mark = trace_.size();
  push(step);
  const bool ok = eval(f, team);
  pop();
  truncate(mark);
  return ok;
}

bool Evaluator::eval_or_pruned(const Formula& f, const Team& team) {
  // Rows are placed one at a time; a part that already fails cannot recover.
  const std::size_t n = team.size();
  std::vector<bool> left(n, false), right(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return split_and_eval(f, team, left, right);
    for (auto* part : {&left, &right}) {
      (*part)[i] = true;
      count_split();
      const bool is_left = part == &left;
      if (holds_on(is_left ? f.lhs() : f.rhs(), is_left ? PathStep::Lhs : PathStep::Rhs, team.subteam(*part)) &&
          place(i + 1))
        return true;
      (*part)[i] = false;
    }
    return false;
  };
  return place(0);
}

bool Evaluator::eval_or_lax(const Formula& f, const Team& team) {
  // Each row goes to the left part, the right part, or both.
  const std::size_t n = team.size();
  std::vector<std::uint32_t> label(n, 0);
  std::vector<bool> left(n), right(n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      left[i] = label[i] != 1;
      right[i] = label[i] != 0;
    }
    if (split_and_eval(f, team, left, right)) return true;
  } while (step_counter(label, 3));
  return false;
}

bool Evaluator::eval_exists_strict(const Formula& f, const Team& team) {
  const std::size_t n = team.size();
  note_rows(n);
  std::vector<std::uint32_t> values(n, 0);
  const auto domain = static_cast<std::uint32_t>(structure_.size());
  push(PathStep::Body);
  do {
    count_witness();
    const std::size_t mark = trace_.size();
    Team extended = strict_extension(team, f.bound(), std::vector<Element>(values.begin(), values.end()));
    if (eval(f.body(), extended)) {
      pop();
      record(FormulaKind::Exists, team, std::move(extended));
      return true;
    }
    truncate(mark);
  } while (step_counter(values, domain));
  pop();
  return false;
}

bool Evaluator::eval_exists_lax(const Formula& f, const Team& team) {
  const std::size_t n = team.size();
  const std::size_t m = structure_.size();
  if (m >= 32) throw LimitExceeded("domain too large for lax witness enumeration");
  // Digit d encodes the nonempty subset with bitmask d + 1.
  const auto radix = static_cast<std::uint32_t>((1U << m) - 1);
  std::vector<std::uint32_t> masks(n, 0);
  std::vector<std::vector<Element>> sets(n);
  push(PathStep::Body);
  do {
    count_witness();
    for (std::size_t i = 0; i < n; ++i) {
      sets[i].clear();
      for (std::size_t e = 0; e < m; ++e) {
        if (((masks[i] + 1) >> e) & 1U) sets[i].push_back(static_cast<Element>(e));
      }
    }
    Team extended = lax_extension(team, f.bound(), sets);
    note_rows(extended.size());
    const std::size_t mark = trace_.size();
    if (eval(f.body(), extended)) {
      pop();
      record(FormulaKind::Exists, team, std::move(extended));
      return true;
    }
    truncate(mark);
  } while (step_counter(masks, radix));
  pop();
  return false;
}

}  // namespace detail

bool evaluate_atom(const Structure& structure, const Team& team, const Formula& atom) {
  switch (atom.kind()) {
    case FormulaKind::Dep:
      return detail::dep_holds(structure, team, atom);
    case FormulaKind::Ind:
      return detail::ind_holds(structure, team, atom);
    case FormulaKind::Inc:
      return detail::inc_holds(structure, team, atom);
    default:
      throw UsageError("not a dependency atom: " + to_string(atom));
  }
}

bool check_flatness_shortcut(const Structure& structure, const Team& team, const Formula& formula) {
  if (!is_first_order(formula)) throw UsageError("flatness shortcut needs a first-order formula");
  for (std::size_t i = 0; i < team.size(); ++i) {
    Bindings b(structure, team, i);
    if (!tarski_holds(structure, formula, b)) return false;
  }
  return true;
}

namespace {

void check_inputs(const Structure& structure, const Team& team, const Formula& formula,
                  std::vector<std::string>& warnings) {
  if (structure.size() == 0) throw UsageError("structure has an empty domain");
  if (structure.size() < 2) warnings.push_back("structure has fewer than two elements");
  for (const auto& v : free_variables(formula)) {
    if (!team.has_var(v) && !structure.constant(v)) {
      throw UsageError("free variable " + v + " is not in the team domain");
    }
  }
  for (const auto& row : team.rows()) {
    for (Element e : row) {
      if (e >= structure.size()) throw UsageError("team value " + std::to_string(e) + " is outside the domain");
    }
  }
}

}  // namespace

EvalResult evaluate_detailed(const Structure& structure, const Team& team, const Formula& formula,
                             SemanticsMode mode, const EvalLimits& limits, const EvalOptions& options) {
  EvalResult result;
  check_inputs(structure, team, formula, result.warnings);
  detail::Evaluator evaluator(structure, mode, limits, options);
  evaluator.note_rows(team.size());
  result.verdict = evaluator.eval(formula, team);
  result.stats = evaluator.stats();
  if (options.record_trace && result.verdict) result.trace = EvalTrace{std::move(evaluator.trace())};
  return result;
}

bool evaluate(const Structure& structure, const Team& team, const Formula& formula, SemanticsMode mode,
              const EvalLimits& limits, const EvalOptions& options) {
  EvalOptions quiet = options;
  quiet.record_trace = false;
  return evaluate_detailed(structure, team, formula, mode, limits, quiet).verdict;
}

bool evaluate_sentence(const Structure& structure, const Formula& sentence, SemanticsMode mode,
                       const EvalLimits& limits, const EvalOptions& options) {
  return evaluate(structure, Team::unit(), sentence, mode, limits, options);
}

}  // namespace teamlogic
