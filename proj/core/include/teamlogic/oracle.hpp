#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "teamlogic/formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/structure.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

enum class EquivalenceVerdict {
  EquivalentUpToBound,
  Counterexample,
  /// A search limit ran out before the bound was exhausted.
  Inconclusive,
};

std::string to_string(EquivalenceVerdict verdict);

struct Counterexample {
  Structure structure;
  /// Absent for sentence-level checks.
  std::optional<Team> team;
  bool lhs = false;
  bool rhs = false;
};

struct EquivalenceReport {
  EquivalenceVerdict verdict = EquivalenceVerdict::EquivalentUpToBound;
  std::uint64_t structures_tested = 0;
  std::uint64_t teams_tested = 0;
  std::optional<Counterexample> counterexample;
  /// Reason for an inconclusive verdict.
  std::string message;
  double seconds = 0.0;

  bool equivalent() const { return verdict == EquivalenceVerdict::EquivalentUpToBound; }
};

struct OracleBounds {
  std::size_t min_size = 2;
  std::size_t max_size = 3;
  /// Open checks: largest team enumerated. Unset means every team.
  std::optional<std::size_t> max_rows;
  /// Open checks: the declared variable set may not exceed this.
  std::size_t max_vars = 4;
};

/// Compares two sentences on every structure over `vocabulary` with
/// min_size..max_size elements and stops at the first divergence.
EquivalenceReport check_sentence_equivalence(const Formula& lhs, const Formula& rhs, const Vocabulary& vocabulary,
                                             SemanticsMode mode, const OracleBounds& bounds = {},
                                             const EvalLimits& limits = {});

/// Compares two formulas on every structure and every team over the union of
/// their free variables (sorted by name).
EquivalenceReport check_open_equivalence(const Formula& lhs, const Formula& rhs, const Vocabulary& vocabulary,
                                         SemanticsMode mode, const OracleBounds& bounds = {},
                                         const EvalLimits& limits = {});

/// Human-readable report.
std::string to_string(const EquivalenceReport& report);
/// Machine-readable summary, one key=value per line.
std::string to_key_values(const EquivalenceReport& report);

std::ostream& operator<<(std::ostream& out, const EquivalenceReport& report);

}  // namespace teamlogic
