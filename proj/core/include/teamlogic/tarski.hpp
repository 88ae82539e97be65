#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/structure.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

/// Variable environment for single-assignment evaluation. Later bindings
/// shadow earlier ones; unbound names fall back to structure constants.
class Bindings {
 public:
  explicit Bindings(const Structure& structure) : structure_(&structure) {}
  Bindings(const Structure& structure, const Assignment& assignment);
  Bindings(const Structure& structure, const Team& team, std::size_t row);

  void push(std::string_view var, Element value) { stack_.emplace_back(var, value); }
  void pop() { stack_.pop_back(); }
  /// Throws UsageError for names that are neither bound nor constants.
  Element lookup(std::string_view var) const;

 private:
  const Structure* structure_;
  std::vector<std::pair<std::string_view, Element>> stack_;
};

/// Classical satisfaction of a first-order formula by one assignment.
/// Throws UsageError if the formula contains a dependency atom.
bool tarski_holds(const Structure& structure, const Formula& formula, Bindings& bindings);
bool tarski_holds(const Structure& structure, const Formula& formula, const Assignment& assignment);

/// Truth of a single first-order literal under `bindings`.
bool literal_holds(const Structure& structure, const Formula& literal, const Bindings& bindings);

}  // namespace teamlogic
