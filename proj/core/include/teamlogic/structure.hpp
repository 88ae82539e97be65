#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/formula.hpp"

namespace teamlogic {

/// Domain elements are 0-based indices into the structure's domain.
using Element = std::uint32_t;
using Tuple = std::vector<Element>;

struct RelationSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

/// Relational vocabulary plus constant names.
struct Vocabulary {
  std::vector<RelationSymbol> relations;
  std::vector<std::string> constants;

  /// Parses "P/1,E/2" (commas or whitespace); a bare name is a constant.
  static Vocabulary parse(std::string_view spec);

  const RelationSymbol* find(const std::string& name) const;
  /// Union; throws UsageError on arity clashes.
  Vocabulary merged(const Vocabulary& other) const;
  std::string to_string() const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

/// Relation symbols (and their arities) used by the non-equality literals of a formula.
Vocabulary vocabulary_of(const Formula& formula);

class Relation {
 public:
  Relation(std::size_t arity, std::size_t domain_size);

  std::size_t arity() const { return arity_; }
  const std::set<Tuple>& tuples() const { return tuples_; }
  void insert(const Tuple& tuple);
  bool contains(std::span<const Element> tuple) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.arity_ == b.arity_ && a.tuples_ == b.tuples_;
  }

 private:
  std::size_t arity_;
  std::size_t domain_size_;
  std::set<Tuple> tuples_;
  // Dense membership bitmap for small arities; empty when too large.
  std::vector<bool> dense_;
};

/// Finite relational structure with domain {0, .., n-1}.
class Structure {
 public:
  explicit Structure(std::size_t domain_size);

  std::size_t size() const { return domain_size_; }

  void add_relation(const std::string& name, std::size_t arity);
  void add_tuple(const std::string& name, const Tuple& tuple);
  void set_constant(const std::string& name, Element value);

  bool has_relation(const std::string& name) const { return relations_.count(name) != 0; }
  const Relation& relation(const std::string& name) const;
  const std::map<std::string, Relation>& relations() const { return relations_; }
  std::optional<Element> constant(const std::string& name) const;
  const std::map<std::string, Element>& constants() const { return constants_; }

  /// Membership test; throws UsageError for unknown names or arity mismatches.
  bool holds(const std::string& name, std::span<const Element> tuple) const;

  Vocabulary vocabulary() const;

  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  std::size_t domain_size_;
  std::map<std::string, Relation> relations_;
  std::map<std::string, Element> constants_;
};

/// Every tuple of M^arity in lexicographic order.
std::vector<Tuple> all_tuples(std::size_t domain_size, std::size_t arity);

}  // namespace teamlogic
