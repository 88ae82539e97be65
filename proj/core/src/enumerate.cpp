#include "teamlogic/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    if (r > kSaturated / num) return kSaturated;
    r = r * num / i;
  }
  return r;
}

}  // namespace

StructureEnumerator::StructureEnumerator(Vocabulary vocabulary, std::size_t max_size, std::size_t min_size)
    : vocab_(std::move(vocabulary)), max_size_(max_size), size_(min_size) {
  if (min_size == 0) throw UsageError("structures need at least one element");
  if (min_size > max_size) done_ = true;
}

std::uint64_t StructureEnumerator::count_for_size(const Vocabulary& vocabulary, std::size_t size) {
  std::uint64_t total = 1;
  for (const auto& r : vocabulary.relations) {
    std::uint64_t cells = 1;
    for (std::size_t i = 0; i < r.arity; ++i) cells = saturating_mul(cells, size);
    for (std::uint64_t i = 0; i < cells; ++i) total = saturating_mul(total, 2);
  }
  for (std::size_t i = 0; i < vocabulary.constants.size(); ++i) total = saturating_mul(total, size);
  return total;
}

bool StructureEnumerator::start_size() {
  if (size_ > max_size_) return false;
  digits_.clear();
  radix_.clear();
  tuples_.clear();
  for (const auto& r : vocab_.relations) {
    tuples_.push_back(all_tuples(size_, r.arity));
    for (std::size_t i = 0; i < tuples_.back().size(); ++i) {
      digits_.push_back(0);
      radix_.push_back(2);
    }
  }
  for (std::size_t i = 0; i < vocab_.constants.size(); ++i) {
    digits_.push_back(0);
    radix_.push_back(static_cast<std::uint32_t>(size_));
  }
  return true;
}

Structure StructureEnumerator::build() const {
  Structure s(size_);
  std::size_t d = 0;
  for (std::size_t r = 0; r < vocab_.relations.size(); ++r) {
    const auto& sym = vocab_.relations[r];
    s.add_relation(sym.name, sym.arity);
    for (const auto& t : tuples_[r]) {
      if (digits_[d++]) s.add_tuple(sym.name, t);
    }
  }
  for (const auto& c : vocab_.constants) s.set_constant(c, digits_[d++]);
  return s;
}

std::optional<Structure> StructureEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!start_size()) {
      done_ = true;
      return std::nullopt;
    }
    return build();
  }
  // Increment the odometer, least significant digit last.
  std::size_t i = digits_.size();
  while (i > 0) {
    --i;
    if (++digits_[i] < radix_[i]) return build();
    digits_[i] = 0;
  }
  ++size_;
  if (!start_size()) {
    done_ = true;
    return std::nullopt;
  }
  return build();
}

std::vector<Structure> enumerate_structures(const Vocabulary& vocabulary, std::size_t max_size,
                                            std::size_t min_size) {
  std::vector<Structure> out;
  StructureEnumerator e(vocabulary, max_size, min_size);
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

TeamEnumerator::TeamEnumerator(std::size_t domain_size, VariableList vars, std::optional<std::size_t> max_rows,
                               std::uint64_t max_teams) {
  std::sort(vars.begin(), vars.end());
  vars_ = std::move(vars);
  universe_ = all_tuples(domain_size, vars_.size());
  max_rows_ = std::min(max_rows.value_or(universe_.size()), universe_.size());
  for (std::size_t k = 0; k <= max_rows_; ++k) total_ = saturating_add(total_, binomial(universe_.size(), k));
  if (total_ > max_teams) {
    throw LimitExceeded("team enumeration over " + std::to_string(universe_.size()) +
                        " assignments exceeds the limit of " + std::to_string(max_teams) + " teams");
  }
}

std::optional<Team> TeamEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    k_ = 0;
    combo_.clear();
  } else {
    // Next k-combination of universe indices in lexicographic order.
    const std::size_t n = universe_.size();
    std::size_t i = combo_.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      if (combo_[i] < n - combo_.size() + i) {
        ++combo_[i];
        for (std::size_t j = i + 1; j < combo_.size(); ++j) combo_[j] = combo_[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      ++k_;
      if (k_ > max_rows_) {
        done_ = true;
        return std::nullopt;
      }
      combo_.resize(k_);
      for (std::size_t j = 0; j < k_; ++j) combo_[j] = j;
    }
  }
  std::vector<Tuple> rows;
  rows.reserve(combo_.size());
  for (std::size_t idx : combo_) rows.push_back(universe_[idx]);
  return Team(vars_, std::move(rows));
}

std::vector<Team> enumerate_teams(const Structure& structure, const VariableList& vars,
                                  std::optional<std::size_t> max_rows, std::uint64_t max_teams) {
  std::vector<Team> out;
  TeamEnumerator e(structure.size(), vars, max_rows, max_teams);
  while (auto t = e.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace teamlogic
