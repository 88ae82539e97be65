// Strict existential blocks E y1 ... E yn. body are solved as one search over
// the table of witness values, one cell per (row, block variable), filled in
// row-major order with conflict-directed backjumping. Conjuncts of the body
// are checked as soon as their variables are assigned:
//   first-order conjuncts pointwise on the row (flatness),
//   dep atoms pairwise against earlier rows,
//   inc and ind atoms by a necessary condition at each row completion.
// Everything else is evaluated on the finished team by the definitional rules.

#include <algorithm>
#include <optional>

#include "evaluator.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/tarski.hpp"

namespace teamlogic::detail {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set_below(std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) set(i);
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

enum class ConjunctKind { FirstOrder, Dep, Inc, Ind, Other };

struct Conjunct {
  Formula formula;
  SubformulaPath path;  // relative to the block body
  ConjunctKind kind = ConjunctKind::Other;
  std::vector<std::size_t> block_vars;  // block indices occurring, ascending
  int last = -1;                        // highest block index, -1 if none
  // First-order: free names bound from the row.
  VariableList names;
  std::vector<ValueRef> name_refs;
  // Dep: first = condition, second = determined. Inc: left, right.
  // Ind: first = condition ++ left, second = right, split at `cond_width`.
  std::vector<ValueRef> first;
  std::vector<ValueRef> second;
  std::size_t cond_width = 0;
};

void flatten(const Formula& f, SubformulaPath& path, std::vector<std::pair<Formula, SubformulaPath>>& out) {
  if (f.kind() == FormulaKind::And) {
    path.push_back(PathStep::Lhs);
    flatten(f.lhs(), path, out);
    path.back() = PathStep::Rhs;
    flatten(f.rhs(), path, out);
    path.pop_back();
    return;
  }
  out.emplace_back(f, path);
}

}  // namespace

class BlockSearch {
 public:
  BlockSearch(Evaluator& ev, const Formula& top, const Team& team) : ev_(ev), team_(team) {
    Formula cur = top;
    while (cur.kind() == FormulaKind::Exists) {
      const Variable& v = cur.bound();
      if (team.has_var(v) || std::find(block_.begin(), block_.end(), v) != block_.end()) {
        throw UsageError("variable " + v + " is already in the team domain");
      }
      block_.push_back(v);
      cur = cur.body();
    }
    body_ = cur;
    rows_ = team.size();
    base_ = team.vars().size();
    width_ = base_ + block_.size();
    cells_ = rows_ * block_.size();
    work_.assign(rows_ * width_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::copy(team.rows()[r].begin(), team.rows()[r].end(), work_.begin() + r * width_);
    }
    classify();
  }

  bool run() {
    ev_.note_rows(rows_);
    if (!prechecks()) return false;
    const std::size_t mark = ev_.trace_.size();
    if (solve(0)) {
      ev_.truncate(mark);
      return false;
    }
    record_witnesses();
    return true;
  }

 private:
  ValueRef ref(const Variable& name) const {
    for (std::size_t j = 0; j < block_.size(); ++j) {
      if (block_[j] == name) return {false, base_ + j};
    }
    if (auto col = team_.column(name)) return {false, *col};
    if (auto c = ev_.structure_.constant(name)) return {true, *c};
    throw UsageError("variable " + name + " is not in the team domain");
  }

  std::vector<ValueRef> refs(const VariableList& names) const {
    std::vector<ValueRef> out;
    for (const auto& n : names) out.push_back(ref(n));
    return out;
  }

  void note_block_vars(Conjunct& c, const std::vector<ValueRef>& rs) const {
    for (const auto& r : rs) {
      if (!r.constant && r.index >= base_) c.block_vars.push_back(r.index - base_);
    }
  }

  void classify() {
    std::vector<std::pair<Formula, SubformulaPath>> parts;
    SubformulaPath rel;
    flatten(body_, rel, parts);
    for (auto& [f, path] : parts) {
      Conjunct c{f, path};
      switch (f.kind()) {
        case FormulaKind::Dep:
          c.kind = ConjunctKind::Dep;
          c.first = refs(f.condition());
          c.second = refs({f.determined()});
          break;
        case FormulaKind::Inc:
          c.kind = ConjunctKind::Inc;
          c.first = refs(f.left_vars());
          c.second = refs(f.right_vars());
          break;
        case FormulaKind::Ind:
          c.kind = ConjunctKind::Ind;
          c.first = refs(f.condition());
          c.cond_width = c.first.size();
          for (const auto& r : refs(f.left_vars())) c.first.push_back(r);
          c.second = refs(f.right_vars());
          break;
        default:
          if (ev_.first_order(f)) {
            c.kind = ConjunctKind::FirstOrder;
            for (const auto& v : free_variables(f)) {
              auto r = ref(v);
              if (r.constant) continue;
              c.names.push_back(v);
              c.name_refs.push_back(r);
            }
            note_block_vars(c, c.name_refs);
          } else {
            c.kind = ConjunctKind::Other;
          }
      }
      note_block_vars(c, c.first);
      note_block_vars(c, c.second);
      std::sort(c.block_vars.begin(), c.block_vars.end());
      c.block_vars.erase(std::unique(c.block_vars.begin(), c.block_vars.end()), c.block_vars.end());
      if (!c.block_vars.empty()) c.last = static_cast<int>(c.block_vars.back());
      if (c.kind == ConjunctKind::Inc || c.kind == ConjunctKind::Ind) has_global_ = true;
      conjuncts_.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < conjuncts_.size(); ++i) {
      const auto& c = conjuncts_[i];
      if (c.kind == ConjunctKind::FirstOrder || c.kind == ConjunctKind::Dep) {
        if (c.last < 0) {
          early_.push_back(i);
        } else {
          by_last_.resize(block_.size());
          by_last_[c.last].push_back(i);
        }
      }
    }
    by_last_.resize(block_.size());
  }

  const Element* row(std::size_t r) const { return work_.data() + r * width_; }

  bool fo_holds(const Conjunct& c, std::size_t r) const {
    Bindings b(ev_.structure_);
    for (std::size_t i = 0; i < c.names.size(); ++i) b.push(c.names[i], c.name_refs[i].of(row(r)));
    return tarski_holds(ev_.structure_, c.formula, b);
  }

  // Row i < r that clashes with row r on a dep conjunct, if any.
  std::optional<std::size_t> dep_clash(const Conjunct& c, std::size_t r) const {
    const Element* s = row(r);
    for (std::size_t i = 0; i < r; ++i) {
      const Element* t = row(i);
      bool same = true;
      for (const auto& ref : c.first) {
        if (ref.of(s) != ref.of(t)) {
          same = false;
          break;
        }
      }
      if (same && c.second[0].of(s) != c.second[0].of(t)) return i;
    }
    return std::nullopt;
  }

  bool prechecks() const {
    for (std::size_t i : early_) {
      const auto& c = conjuncts_[i];
      for (std::size_t r = 0; r < rows_; ++r) {
        if (c.kind == ConjunctKind::FirstOrder ? !fo_holds(c, r) : dep_clash(c, r).has_value()) return false;
      }
    }
    return true;
  }

  // Could some row match `target` at `positions`? Block cells of rows after
  // `done` are unknown and match anything.
  bool some_row_matches(const std::vector<ValueRef>& positions, const Tuple& target, std::size_t done) const {
    for (std::size_t j = 0; j < rows_; ++j) {
      const Element* t = row(j);
      bool ok = true;
      for (std::size_t p = 0; p < positions.size() && ok; ++p) {
        const auto& ref = positions[p];
        if (j > done && !ref.constant && ref.index >= base_) continue;
        ok = ref.of(t) == target[p];
      }
      if (ok) return true;
    }
    return false;
  }

  bool globals_possible(std::size_t done) const {
    Tuple target;
    for (const auto& c : conjuncts_) {
      if (c.kind == ConjunctKind::Inc) {
        for (std::size_t i = 0; i <= done; ++i) {
          target.clear();
          for (const auto& ref : c.first) target.push_back(ref.of(row(i)));
          if (!some_row_matches(c.second, target, done)) return false;
        }
      } else if (c.kind == ConjunctKind::Ind) {
        std::vector<ValueRef> all = c.first;
        all.insert(all.end(), c.second.begin(), c.second.end());
        for (std::size_t i = 0; i <= done; ++i) {
          for (std::size_t i2 = 0; i2 <= done; ++i2) {
            bool same = true;
            for (std::size_t p = 0; p < c.cond_width && same; ++p) {
              same = c.first[p].of(row(i)) == c.first[p].of(row(i2));
            }
            if (!same) continue;
            target.clear();
            for (const auto& ref : c.first) target.push_back(ref.of(row(i)));
            for (const auto& ref : c.second) target.push_back(ref.of(row(i2)));
            if (!some_row_matches(all, target, done)) return false;
          }
        }
      }
    }
    return true;
  }

  Team extended_team() const {
    VariableList vars = team_.vars();
    vars.insert(vars.end(), block_.begin(), block_.end());
    std::vector<Tuple> rows;
    rows.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) rows.emplace_back(row(r), row(r) + width_);
    return Team(std::move(vars), std::move(rows));
  }

  bool leaf_holds() {
    const Team extended = extended_team();
    for (const auto& c : conjuncts_) {
      if ((c.kind == ConjunctKind::Inc || c.kind == ConjunctKind::Ind) &&
          !evaluate_atom(ev_.structure_, extended, c.formula)) {
        return false;
      }
    }
    const std::size_t mark = ev_.trace_.size();
    for (const auto& c : conjuncts_) {
      if (c.kind != ConjunctKind::Other) continue;
      for (std::size_t j = 0; j < block_.size(); ++j) ev_.push(PathStep::Body);
      for (PathStep s : c.path) ev_.push(s);
      const bool ok = ev_.eval(c.formula, extended);
      for (std::size_t j = 0; j < block_.size() + c.path.size(); ++j) ev_.pop();
      if (!ok) {
        ev_.truncate(mark);
        return false;
      }
    }
    return true;
  }

  // Returns nothing on success, otherwise the set of earlier cells whose
  // values are to blame for the failure.
  std::optional<Bits> solve(std::size_t k) {
    if (k == cells_) {
      if (leaf_holds()) return std::nullopt;
      Bits all(cells_);
      all.set_below(cells_);
      return all;
    }
    const std::size_t n = block_.size();
    const std::size_t r = k / n;
    const std::size_t j = k % n;
    Element& cell = work_[r * width_ + base_ + j];
    Bits conflict(cells_);
    for (Element v = 0; v < ev_.structure_.size(); ++v) {
      ev_.count_witness();
      cell = v;
      if (!consistent(r, j, conflict)) continue;
      if (j + 1 == n && has_global_ && !globals_possible(r)) {
        conflict.set_below(k);
        continue;
      }
      auto below = solve(k + 1);
      if (!below) return std::nullopt;
      if (!below->test(k)) return below;
      below->reset(k);
      conflict |= *below;
    }
    return conflict;
  }

  void blame(Bits& conflict, const Conjunct& c, std::size_t r, std::size_t skip) const {
    const std::size_t n = block_.size();
    for (std::size_t b : c.block_vars) {
      if (r * n + b != skip) conflict.set(r * n + b);
    }
  }

  bool consistent(std::size_t r, std::size_t j, Bits& conflict) const {
    const std::size_t k = r * block_.size() + j;
    for (std::size_t i : by_last_[j]) {
      const auto& c = conjuncts_[i];
      if (c.kind == ConjunctKind::FirstOrder) {
        if (!fo_holds(c, r)) {
          blame(conflict, c, r, k);
          return false;
        }
      } else if (auto other = dep_clash(c, r)) {
        blame(conflict, c, r, k);
        blame(conflict, c, *other, k);
        return false;
      }
    }
    return true;
  }

  void record_witnesses() {
    if (!ev_.options_.record_trace) return;
    const Team extended = extended_team();
    VariableSet scope(team_.vars().begin(), team_.vars().end());
    Team input = team_;
    for (std::size_t j = 0; j < block_.size(); ++j) {
      scope.insert(block_[j]);
      Team output = j + 1 == block_.size() ? extended : restrict(extended, scope);
      ev_.record(FormulaKind::Exists, input, output);
      ev_.push(PathStep::Body);
      input = std::move(output);
    }
    for (std::size_t j = 0; j < block_.size(); ++j) ev_.pop();
  }

  Evaluator& ev_;
  const Team& team_;
  VariableList block_;
  Formula body_ = Formula::equality("x", "x");
  std::size_t rows_ = 0;
  std::size_t base_ = 0;
  std::size_t width_ = 0;
  std::size_t cells_ = 0;
  std::vector<Element> work_;
  std::vector<Conjunct> conjuncts_;
  std::vector<std::size_t> early_;
  std::vector<std::vector<std::size_t>> by_last_;
  bool has_global_ = false;
};

bool Evaluator::eval_block(const Formula& f, const Team& team) {
  BlockSearch search(*this, f, team);
  return search.run();
}

}  // namespace teamlogic::detail
