#include <ostream>

#include "evaluator.hpp"
#include "teamlogic/semantics.hpp"

namespace teamlogic {

const TraceEntry* EvalTrace::find(const SubformulaPath& path, const Team& input) const {
  for (const auto& e : entries) {
    if (e.path == path && e.input == input) return &e;
  }
  return nullptr;
}

namespace {

class Replayer {
 public:
  Replayer(const Structure& m, SemanticsMode mode, const EvalTrace& trace) : m_(m), mode_(mode), trace_(trace) {}

  bool replay(const Formula& f, const Team& team) {
    switch (f.kind()) {
      case FormulaKind::Literal:
        return detail::literal_on_team(m_, team, f);
      case FormulaKind::Dep:
      case FormulaKind::Ind:
      case FormulaKind::Inc:
        return evaluate_atom(m_, team, f);
      case FormulaKind::And:
        return child(PathStep::Lhs, f.lhs(), team) && child(PathStep::Rhs, f.rhs(), team);
      case FormulaKind::Forall:
        return child(PathStep::Body, f.body(), universal_extension(team, f.bound(), m_));
      case FormulaKind::Or: {
        const TraceEntry* e = trace_.find(path_, team);
        if (!e) return is_first_order(f) && check_flatness_shortcut(m_, team, f);
        if (e->first.vars() != team.vars() || e->second.vars() != team.vars()) return false;
        if (e->first.united(e->second) != team) return false;
        if (mode_ == SemanticsMode::Strict && e->first.size() + e->second.size() != team.size()) return false;
        return child(PathStep::Lhs, f.lhs(), e->first) && child(PathStep::Rhs, f.rhs(), e->second);
      }
      case FormulaKind::Exists: {
        const TraceEntry* e = trace_.find(path_, team);
        if (!e) return is_first_order(f) && check_flatness_shortcut(m_, team, f);
        const Team& ext = e->first;
        if (!ext.has_var(f.bound()) || ext.vars().size() != team.vars().size() + 1) return false;
        VariableSet dom(team.vars().begin(), team.vars().end());
        if (restrict(ext, dom) != team) return false;
        if (mode_ == SemanticsMode::Strict && ext.size() != team.size()) return false;
        return child(PathStep::Body, f.body(), ext);
      }
    }
    return false;
  }

 private:
  bool child(PathStep step, const Formula& f, const Team& team) {
    path_.push_back(step);
    const bool ok = replay(f, team);
    path_.pop_back();
    return ok;
  }

  const Structure& m_;
  SemanticsMode mode_;
  const EvalTrace& trace_;
  SubformulaPath path_;
};

const char* step_name(PathStep s) {
  switch (s) {
    case PathStep::Lhs:
      return "L";
    case PathStep::Rhs:
      return "R";
    case PathStep::Body:
      return "B";
  }
  return "?";
}

}  // namespace

bool replay_trace(const Structure& structure, const Team& team, const Formula& formula, SemanticsMode mode,
                  const EvalTrace& trace) {
  Replayer r(structure, mode, trace);
  return r.replay(formula, team);
}

std::ostream& operator<<(std::ostream& out, const EvalTrace& trace) {
  for (const auto& e : trace.entries) {
    out << "at /";
    for (PathStep s : e.path) out << step_name(s);
    if (e.kind == FormulaKind::Or) {
      out << " split " << e.input.size() << " rows into " << e.first.size() << " + " << e.second.size() << "\n";
      out << "left\n" << e.first << "right\n" << e.second;
    } else {
      out << " witness for " << e.input.size() << " rows\n" << e.first;
    }
  }
  return out;
}

}  // namespace teamlogic
