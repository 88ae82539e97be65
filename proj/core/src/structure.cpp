#include "teamlogic/structure.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 16;

std::optional<std::size_t> dense_size(std::size_t n, std::size_t arity) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (n != 0 && total > kDenseLimit / n) return std::nullopt;
    total *= n;
  }
  return total;
}

void collect_vocabulary(const Formula& f, Vocabulary& out) {
  switch (f.kind()) {
    case FormulaKind::Literal:
      if (!f.is_equality()) {
        const RelationSymbol sym{f.predicate(), f.arguments().size()};
        if (const auto* known = out.find(sym.name)) {
          if (known->arity != sym.arity) {
            throw UsageError("predicate " + sym.name + " used with arities " +
                             std::to_string(known->arity) + " and " + std::to_string(sym.arity));
          }
        } else {
          out.relations.push_back(sym);
        }
      }
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
      collect_vocabulary(f.lhs(), out);
      collect_vocabulary(f.rhs(), out);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      collect_vocabulary(f.body(), out);
      break;
    default:
      break;
  }
}

}  // namespace

Vocabulary Vocabulary::parse(std::string_view spec) {
  Vocabulary vocab;
  std::string item;
  auto flush = [&]() {
    if (item.empty()) return;
    const auto slash = item.find('/');
    if (slash == std::string::npos) {
      vocab.constants.push_back(item);
    } else {
      const std::string name = item.substr(0, slash);
      const std::string digits = item.substr(slash + 1);
      if (name.empty() || digits.empty() ||
          !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw UsageError("malformed vocabulary entry '" + item + "'");
      }
      vocab = vocab.merged(Vocabulary{{{name, std::stoul(digits)}}, {}});
    }
    item.clear();
  };
  for (char c : spec) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      item.push_back(c);
    }
  }
  flush();
  return vocab;
}

const RelationSymbol* Vocabulary::find(const std::string& name) const {
  for (const auto& r : relations) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

Vocabulary Vocabulary::merged(const Vocabulary& other) const {
  Vocabulary out = *this;
  for (const auto& r : other.relations) {
    if (const auto* known = out.find(r.name)) {
      if (known->arity != r.arity) {
        throw UsageError("relation " + r.name + " declared with arities " +
                         std::to_string(known->arity) + " and " + std::to_string(r.arity));
      }
    } else {
      out.relations.push_back(r);
    }
  }
  for (const auto& c : other.constants) {
    if (std::find(out.constants.begin(), out.constants.end(), c) == out.constants.end()) {
      out.constants.push_back(c);
    }
  }
  return out;
}

std::string Vocabulary::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& r : relations) {
    out << (first ? "" : ",") << r.name << '/' << r.arity;
    first = false;
  }
  for (const auto& c : constants) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  return out.str();
}

Vocabulary vocabulary_of(const Formula& formula) {
  Vocabulary out;
  collect_vocabulary(formula, out);
  return out;
}

Relation::Relation(std::size_t arity, std::size_t domain_size)
    : arity_(arity), domain_size_(domain_size) {
  if (auto n = dense_size(domain_size, arity)) dense_.assign(*n, false);
}

void Relation::insert(const Tuple& tuple) {
  if (tuple.size() != arity_) throw UsageError("tuple arity mismatch");
  std::size_t index = 0;
  for (Element e : tuple) {
    if (e >= domain_size_) throw UsageError("tuple element " + std::to_string(e) + " outside domain");
    index = index * domain_size_ + e;
  }
  tuples_.insert(tuple);
  if (!dense_.empty()) dense_[index] = true;
}

bool Relation::contains(std::span<const Element> tuple) const {
  if (!dense_.empty()) {
    std::size_t index = 0;
    for (Element e : tuple) index = index * domain_size_ + e;
    return dense_[index];
  }
  return tuples_.count(Tuple(tuple.begin(), tuple.end())) != 0;
}

Structure::Structure(std::size_t domain_size) : domain_size_(domain_size) {
  if (domain_size == 0) throw UsageError("structure domain must be nonempty");
}

void Structure::add_relation(const std::string& name, std::size_t arity) {
  auto [it, inserted] = relations_.try_emplace(name, arity, domain_size_);
  if (!inserted && it->second.arity() != arity) {
    throw UsageError("relation " + name + " redeclared with a different arity");
  }
}

void Structure::add_tuple(const std::string& name, const Tuple& tuple) {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw UsageError("unknown relation " + name);
  it->second.insert(tuple);
}

void Structure::set_constant(const std::string& name, Element value) {
  if (value >= domain_size_) throw UsageError("constant " + name + " outside domain");
  constants_[name] = value;
}

const Relation& Structure::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw UsageError("unknown relation " + name);
  return it->second;
}

std::optional<Element> Structure::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

bool Structure::holds(const std::string& name, std::span<const Element> tuple) const {
  const Relation& r = relation(name);
  if (r.arity() != tuple.size()) {
    throw UsageError("relation " + name + " has arity " + std::to_string(r.arity()) + ", applied to " +
                     std::to_string(tuple.size()) + " arguments");
  }
  return r.contains(tuple);
}

Vocabulary Structure::vocabulary() const {
  Vocabulary v;
  for (const auto& [name, rel] : relations_) v.relations.push_back({name, rel.arity()});
  for (const auto& [name, value] : constants_) v.constants.push_back(name);
  return v;
}

std::vector<Tuple> all_tuples(std::size_t domain_size, std::size_t arity) {
  std::vector<Tuple> out;
  Tuple cur(arity, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++cur[i] < domain_size) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (arity == 0) return out;
  }
}

}  // namespace teamlogic
