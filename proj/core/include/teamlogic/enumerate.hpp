#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "teamlogic/structure.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

/// Streams every structure over a vocabulary with domain sizes
/// min_size..max_size: sizes ascending, then relation tables (in vocabulary
/// order) and constants counted like an odometer. No isomorphism reduction.
class StructureEnumerator {
 public:
  StructureEnumerator(Vocabulary vocabulary, std::size_t max_size, std::size_t min_size = 2);

  std::optional<Structure> next();

  /// Number of structures of exactly one domain size.
  static std::uint64_t count_for_size(const Vocabulary& vocabulary, std::size_t size);

 private:
  bool start_size();
  Structure build() const;

  Vocabulary vocab_;
  std::size_t max_size_;
  std::size_t size_;
  bool started_ = false;
  bool done_ = false;
  // One digit per relation tuple, then one per constant.
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint32_t> radix_;
  std::vector<std::vector<Tuple>> tuples_;
};

std::vector<Structure> enumerate_structures(const Vocabulary& vocabulary, std::size_t max_size,
                                            std::size_t min_size = 2);

/// Streams every team over `vars` (subsets of M^|vars|, including the empty
/// team), ordered by row count and then lexicographically by row set.
class TeamEnumerator {
 public:
  /// Throws LimitExceeded when the stream would hold more than `max_teams` teams.
  TeamEnumerator(std::size_t domain_size, VariableList vars, std::optional<std::size_t> max_rows = std::nullopt,
                 std::uint64_t max_teams = std::uint64_t{1} << 22);

  std::optional<Team> next();
  std::uint64_t total() const { return total_; }

 private:
  VariableList vars_;
  std::vector<Tuple> universe_;
  std::size_t max_rows_;
  std::uint64_t total_ = 0;
  std::size_t k_ = 0;
  std::vector<std::size_t> combo_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Team> enumerate_teams(const Structure& structure, const VariableList& vars,
                                  std::optional<std::size_t> max_rows = std::nullopt,
                                  std::uint64_t max_teams = std::uint64_t{1} << 22);

}  // namespace teamlogic
