#include "teamlogic/team.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "teamlogic/error.hpp"

namespace teamlogic {

Assignment::Assignment(const VariableList& vars, std::span<const Element> values) {
  if (vars.size() != values.size()) throw UsageError("assignment arity mismatch");
  for (std::size_t i = 0; i < vars.size(); ++i) entries_.emplace_back(vars[i], values[i]);
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].first == entries_[i - 1].first) {
      throw UsageError("assignment lists variable " + entries_[i].first + " twice");
    }
  }
}

std::optional<Element> Assignment::get(const Variable& v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const auto& e, const Variable& key) { return e.first < key; });
  if (it == entries_.end() || it->first != v) return std::nullopt;
  return it->second;
}

Element Assignment::at(const Variable& v) const {
  if (auto e = get(v)) return *e;
  throw UsageError("variable " + v + " is not assigned");
}

Assignment Assignment::with(const Variable& v, Element value) const {
  Assignment out = *this;
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), v,
                             [](const auto& e, const Variable& key) { return e.first < key; });
  if (it != out.entries_.end() && it->first == v) {
    it->second = value;
  } else {
    out.entries_.insert(it, {v, value});
  }
  return out;
}

VariableList Assignment::domain() const {
  VariableList out;
  for (const auto& [v, e] : entries_) out.push_back(v);
  return out;
}

Team::Team(VariableList vars, std::vector<Tuple> rows) {
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (vars[order[i]] == vars[order[i - 1]]) throw UsageError("team lists variable " + vars[order[i]] + " twice");
  }
  const bool sorted = std::is_sorted(order.begin(), order.end());
  vars_.reserve(vars.size());
  for (std::size_t i : order) vars_.push_back(vars[i]);
  for (auto& row : rows) {
    if (row.size() != vars.size()) throw UsageError("team row width does not match its variables");
    if (!sorted) {
      Tuple permuted(row.size());
      for (std::size_t i = 0; i < order.size(); ++i) permuted[i] = row[order[i]];
      row = std::move(permuted);
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  rows_ = std::move(rows);
}

Team Team::unit() { return Team({}, {Tuple{}}); }

Team Team::empty(VariableList vars) { return Team(std::move(vars), {}); }

Team Team::from_assignments(VariableList vars, const std::vector<Assignment>& assignments) {
  std::vector<Tuple> rows;
  rows.reserve(assignments.size());
  for (const auto& a : assignments) {
    if (a.size() != vars.size()) throw UsageError("assignment domain does not match team domain");
    Tuple row;
    for (const auto& v : vars) row.push_back(a.at(v));
    rows.push_back(std::move(row));
  }
  return Team(std::move(vars), std::move(rows));
}

std::optional<std::size_t> Team::column(const Variable& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t Team::column_of(const Variable& v) const {
  if (auto c = column(v)) return *c;
  throw UsageError("variable " + v + " is not in the team domain");
}

Assignment Team::assignment(std::size_t row) const { return Assignment(vars_, rows_.at(row)); }

std::vector<Assignment> Team::assignments() const {
  std::vector<Assignment> out;
  out.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(assignment(i));
  return out;
}

bool Team::contains(const Assignment& a) const {
  if (a.size() != vars_.size()) return false;
  Tuple row;
  for (const auto& v : vars_) {
    auto e = a.get(v);
    if (!e) return false;
    row.push_back(*e);
  }
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

Team Team::subteam(const std::vector<bool>& keep) const {
  Team out;
  out.vars_ = vars_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (keep.at(i)) out.rows_.push_back(rows_[i]);
  }
  return out;
}

Team Team::united(const Team& other) const {
  if (vars_ != other.vars_) throw UsageError("union of teams over different domains");
  Team out;
  out.vars_ = vars_;
  std::set_union(rows_.begin(), rows_.end(), other.rows_.begin(), other.rows_.end(),
                 std::back_inserter(out.rows_));
  return out;
}

bool Team::is_subset_of(const Team& other) const {
  return vars_ == other.vars_ &&
         std::includes(other.rows_.begin(), other.rows_.end(), rows_.begin(), rows_.end());
}

namespace {

void require_fresh(const Team& team, const Variable& v) {
  if (team.has_var(v)) {
    throw UsageError("variable " + v + " is already in the team domain; re-quantification is rejected");
  }
}

// Domain of `team` plus `v`, with the insertion column.
std::pair<VariableList, std::size_t> extended_domain(const Team& team, const Variable& v) {
  VariableList vars = team.vars();
  auto it = std::lower_bound(vars.begin(), vars.end(), v);
  const std::size_t pos = static_cast<std::size_t>(it - vars.begin());
  vars.insert(it, v);
  return {std::move(vars), pos};
}

Tuple insert_at(const Tuple& row, std::size_t pos, Element value) {
  Tuple out;
  out.reserve(row.size() + 1);
  out.insert(out.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(pos));
  out.push_back(value);
  out.insert(out.end(), row.begin() + static_cast<std::ptrdiff_t>(pos), row.end());
  return out;
}

}  // namespace

Team universal_extension(const Team& team, const Variable& v, const Structure& structure) {
  require_fresh(team, v);
  auto [vars, pos] = extended_domain(team, v);
  std::vector<Tuple> rows;
  rows.reserve(team.size() * structure.size());
  for (const auto& row : team.rows()) {
    for (Element m = 0; m < structure.size(); ++m) rows.push_back(insert_at(row, pos, m));
  }
  return Team(std::move(vars), std::move(rows));
}

Team strict_extension(const Team& team, const Variable& v, std::span<const Element> values) {
  require_fresh(team, v);
  if (values.size() != team.size()) throw UsageError("witness function is not total on the team");
  auto [vars, pos] = extended_domain(team, v);
  std::vector<Tuple> rows;
  rows.reserve(team.size());
  for (std::size_t i = 0; i < team.size(); ++i) rows.push_back(insert_at(team.rows()[i], pos, values[i]));
  return Team(std::move(vars), std::move(rows));
}

Team strict_extension(const Team& team, const Variable& v,
                      const std::function<Element(const Assignment&)>& witness) {
  std::vector<Element> values;
  values.reserve(team.size());
  for (std::size_t i = 0; i < team.size(); ++i) values.push_back(witness(team.assignment(i)));
  return strict_extension(team, v, values);
}

Team lax_extension(const Team& team, const Variable& v, const std::vector<std::vector<Element>>& values) {
  require_fresh(team, v);
  if (values.size() != team.size()) throw UsageError("witness function is not total on the team");
  auto [vars, pos] = extended_domain(team, v);
  std::vector<Tuple> rows;
  for (std::size_t i = 0; i < team.size(); ++i) {
    if (values[i].empty()) throw UsageError("lax witness maps an assignment to the empty set");
    for (Element m : values[i]) rows.push_back(insert_at(team.rows()[i], pos, m));
  }
  return Team(std::move(vars), std::move(rows));
}

Team lax_extension(const Team& team, const Variable& v,
                   const std::function<std::vector<Element>(const Assignment&)>& witness) {
  std::vector<std::vector<Element>> values;
  values.reserve(team.size());
  for (std::size_t i = 0; i < team.size(); ++i) values.push_back(witness(team.assignment(i)));
  return lax_extension(team, v, values);
}

Team restrict(const Team& team, const VariableSet& vars) {
  std::vector<std::size_t> cols;
  VariableList kept;
  for (const auto& v : vars) {
    cols.push_back(team.column_of(v));
    kept.push_back(v);
  }
  std::vector<Tuple> rows;
  rows.reserve(team.size());
  for (const auto& row : team.rows()) {
    Tuple r;
    r.reserve(cols.size());
    for (std::size_t c : cols) r.push_back(row[c]);
    rows.push_back(std::move(r));
  }
  return Team(std::move(kept), std::move(rows));
}

Team select(const Team& team, const VariableList& vars, std::span<const Element> values) {
  if (vars.size() != values.size()) throw UsageError("select: variable and value tuples differ in length");
  std::vector<std::size_t> cols;
  for (const auto& v : vars) cols.push_back(team.column_of(v));
  std::vector<bool> keep(team.size());
  for (std::size_t i = 0; i < team.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < cols.size() && match; ++j) match = team.rows()[i][cols[j]] == values[j];
    keep[i] = match;
  }
  return team.subteam(keep);
}

std::set<Tuple> project(const Team& team, const VariableList& vars) {
  std::vector<std::size_t> cols;
  for (const auto& v : vars) cols.push_back(team.column_of(v));
  std::set<Tuple> out;
  for (const auto& row : team.rows()) {
    Tuple t;
    for (std::size_t c : cols) t.push_back(row[c]);
    out.insert(std::move(t));
  }
  return out;
}

std::string to_string(const Team& team) {
  std::ostringstream out;
  out << team;
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const Team& team) {
  out << "vars";
  for (const auto& v : team.vars()) out << ' ' << v;
  out << '\n';
  for (const auto& row : team.rows()) {
    out << "row";
    for (Element e : row) out << ' ' << e;
    out << '\n';
  }
  return out;
}

}  // namespace teamlogic
