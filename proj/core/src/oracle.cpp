#include "teamlogic/oracle.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "teamlogic/enumerate.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/model_io.hpp"

namespace teamlogic {

namespace {

using Clock = std::chrono::steady_clock;

void require_vocabulary(const Formula& f, const Vocabulary& vocabulary) {
  for (const auto& r : vocabulary_of(f).relations) {
    const RelationSymbol* known = vocabulary.find(r.name);
    if (!known || known->arity != r.arity)
      throw UsageError("relation " + r.name + "/" + std::to_string(r.arity) + " is not in the vocabulary");
  }
}

std::string one_line(std::string text) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  std::string out;
  for (char c : text) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  return out;
}

template <typename Body>
EquivalenceReport run_checked(Body&& body) {
  EquivalenceReport report;
  const auto start = Clock::now();
  try {
    body(report);
  } catch (const LimitExceeded& e) {
    report.verdict = EquivalenceVerdict::Inconclusive;
    report.message = e.what();
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace

std::string to_string(EquivalenceVerdict verdict) {
  switch (verdict) {
    case EquivalenceVerdict::EquivalentUpToBound: return "equivalent-up-to-bound";
    case EquivalenceVerdict::Counterexample: return "counterexample";
    case EquivalenceVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

EquivalenceReport check_sentence_equivalence(const Formula& lhs, const Formula& rhs, const Vocabulary& vocabulary,
                                             SemanticsMode mode, const OracleBounds& bounds,
                                             const EvalLimits& limits) {
  if (!free_variables(lhs).empty() || !free_variables(rhs).empty())
    throw UsageError("sentence equivalence needs sentences; use open equivalence for formulas");
  require_vocabulary(lhs, vocabulary);
  require_vocabulary(rhs, vocabulary);
  return run_checked([&](EquivalenceReport& report) {
    StructureEnumerator structures(vocabulary, bounds.max_size, bounds.min_size);
    while (auto m = structures.next()) {
      ++report.structures_tested;
      const bool a = evaluate_sentence(*m, lhs, mode, limits);
      const bool b = evaluate_sentence(*m, rhs, mode, limits);
      if (a != b) {
        report.verdict = EquivalenceVerdict::Counterexample;
        report.counterexample = Counterexample{*m, std::nullopt, a, b};
        return;
      }
    }
  });
}

EquivalenceReport check_open_equivalence(const Formula& lhs, const Formula& rhs, const Vocabulary& vocabulary,
                                         SemanticsMode mode, const OracleBounds& bounds, const EvalLimits& limits) {
  require_vocabulary(lhs, vocabulary);
  require_vocabulary(rhs, vocabulary);
  VariableSet vars = free_variables(lhs);
  for (const auto& v : free_variables(rhs)) vars.insert(v);
  if (vars.size() > bounds.max_vars)
    throw UsageError("formulas have " + std::to_string(vars.size()) + " free variables, more than " +
                     std::to_string(bounds.max_vars));
  const VariableList list(vars.begin(), vars.end());
  return run_checked([&](EquivalenceReport& report) {
    StructureEnumerator structures(vocabulary, bounds.max_size, bounds.min_size);
    while (auto m = structures.next()) {
      ++report.structures_tested;
      TeamEnumerator teams(m->size(), list, bounds.max_rows);
      while (auto x = teams.next()) {
        ++report.teams_tested;
        const bool a = evaluate(*m, *x, lhs, mode, limits);
        const bool b = evaluate(*m, *x, rhs, mode, limits);
        if (a != b) {
          report.verdict = EquivalenceVerdict::Counterexample;
          report.counterexample = Counterexample{*m, *x, a, b};
          return;
        }
      }
    }
  });
}

std::string to_string(const EquivalenceReport& report) {
  std::ostringstream out;
  out << report;
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const EquivalenceReport& r) {
  out << "verdict: " << to_string(r.verdict) << '\n';
  out << "structures tested: " << r.structures_tested << '\n';
  if (r.teams_tested) out << "teams tested: " << r.teams_tested << '\n';
  if (!r.message.empty()) out << "reason: " << r.message << '\n';
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out << "counterexample structure:\n" << format_structure(c.structure);
    if (c.team) out << "counterexample team:\n" << format_team(*c.team);
    out << "lhs: " << (c.lhs ? "true" : "false") << '\n';
    out << "rhs: " << (c.rhs ? "true" : "false") << '\n';
  }
  return out;
}

std::string to_key_values(const EquivalenceReport& r) {
  std::ostringstream out;
  out << "verdict=" << to_string(r.verdict) << '\n';
  out << "structures_tested=" << r.structures_tested << '\n';
  out << "teams_tested=" << r.teams_tested << '\n';
  out << "seconds=" << r.seconds << '\n';
  if (!r.message.empty()) out << "message=" << one_line(r.message) << '\n';
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out << "counterexample_structure=" << one_line(format_structure(c.structure)) << '\n';
    if (c.team) out << "counterexample_team=" << one_line(format_team(*c.team)) << '\n';
    out << "lhs=" << (c.lhs ? "true" : "false") << '\n';
    out << "rhs=" << (c.rhs ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace teamlogic
