#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/structure.hpp"

namespace teamlogic {

/// Total map from a finite variable set into the domain, kept sorted by variable.
class Assignment {
 public:
  Assignment() = default;
  Assignment(const VariableList& vars, std::span<const Element> values);

  std::optional<Element> get(const Variable& v) const;
  Element at(const Variable& v) const;
  /// Copy with `v` mapped to `value` (added or overwritten).
  Assignment with(const Variable& v, Element value) const;
  VariableList domain() const;
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<Variable, Element>>& entries() const { return entries_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::pair<Variable, Element>> entries_;
};

/// A finite set of assignments over a shared variable domain.
///
/// Columns are kept sorted by variable name and rows are sorted and unique,
/// so equal sets of assignments have equal representations.
class Team {
 public:
  /// The empty team over no variables.
  Team() = default;
  /// Rows are given in the order of `vars`; duplicates collapse.
  Team(VariableList vars, std::vector<Tuple> rows);

  /// {∅}: the team containing only the empty assignment.
  static Team unit();
  static Team empty(VariableList vars);
  static Team from_assignments(VariableList vars, const std::vector<Assignment>& assignments);

  const VariableList& vars() const { return vars_; }
  const std::vector<Tuple>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  bool has_var(const Variable& v) const { return column(v).has_value(); }
  std::optional<std::size_t> column(const Variable& v) const;
  /// Column index; throws UsageError for unknown variables.
  std::size_t column_of(const Variable& v) const;

  Assignment assignment(std::size_t row) const;
  std::vector<Assignment> assignments() const;
  bool contains(const Assignment& a) const;

  /// The subteam given by a row mask (true keeps the row).
  Team subteam(const std::vector<bool>& keep) const;
  /// Union with a team over the same domain.
  Team united(const Team& other) const;
  bool is_subset_of(const Team& other) const;

  friend bool operator==(const Team&, const Team&) = default;

 private:
  VariableList vars_;
  std::vector<Tuple> rows_;
};

/// X[M/v]: every row extended by every domain element.
Team universal_extension(const Team& team, const Variable& v, const Structure& structure);
/// X[F/v]: `values[i]` is F applied to row i of `team`.
Team strict_extension(const Team& team, const Variable& v, std::span<const Element> values);
Team strict_extension(const Team& team, const Variable& v,
                      const std::function<Element(const Assignment&)>& witness);
/// X[H/v]: `values[i]` is the nonempty set H(row i).
Team lax_extension(const Team& team, const Variable& v, const std::vector<std::vector<Element>>& values);
Team lax_extension(const Team& team, const Variable& v,
                   const std::function<std::vector<Element>(const Assignment&)>& witness);

/// X restricted to `vars`; rows that become equal collapse.
Team restrict(const Team& team, const VariableSet& vars);
/// X(x̄ = ā): rows whose values on `vars` equal `values`.
Team select(const Team& team, const VariableList& vars, std::span<const Element> values);
/// X(v̄): the relation of value tuples of `vars`.
std::set<Tuple> project(const Team& team, const VariableList& vars);

/// Line-oriented rendering used by the team file format.
std::string to_string(const Team& team);
std::ostream& operator<<(std::ostream& out, const Team& team);

}  // namespace teamlogic
