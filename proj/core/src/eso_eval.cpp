#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "teamlogic/eso.hpp"
#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 24;
constexpr std::int32_t kUnset = -1;

enum class Truth : std::uint8_t { False, True, Unknown };

struct CTerm {
  bool variable = true;
  std::size_t index = 0;  // universal position or function id
  std::vector<CTerm> args;
};

struct CFormula {
  EsoKind kind;
  // Atom: quantified relation id, or the structure relation when `fixed` is set.
  std::size_t relation = 0;
  const Relation* fixed = nullptr;
  std::vector<CTerm> terms;
  std::vector<CFormula> children;
};

struct Symbol {
  std::string name;
  std::size_t arity = 0;
  std::size_t offset = 0;  // first cell id
  std::size_t cells = 0;
  bool function = true;
};

struct Instance {
  const CFormula* formula;
  std::vector<Element> values;  // indexed by universal position
};

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kMaxCells / base) throw LimitExceeded("ESO interpretation table too large");
    out *= base;
  }
  return out;
}

void flatten_and(const EsoFormula& f, std::vector<EsoFormula>& out) {
  if (f.kind() == EsoKind::And) {
    for (const auto& c : f.children()) flatten_and(c, out);
  } else {
    out.push_back(f);
  }
}

class EsoSearch {
 public:
  EsoSearch(const Structure& m, const EsoSentence& s, const EvalLimits& limits)
      : m_(m), s_(s), limits_(limits), n_(m.size()) {
    validate_eso(s);
    std::size_t offset = 0;
    auto add = [&](const SymbolDecl& d, bool function) {
      const std::size_t cells = power(n_, d.arity);
      symbols_.push_back(Symbol{d.name, d.arity, offset, cells, function});
      offset += cells;
      if (offset > kMaxCells) throw LimitExceeded("ESO interpretation table too large");
    };
    for (const auto& d : s.functions) add(d, true);
    for (const auto& d : s.relations) add(d, false);
    values_.assign(offset, kUnset);
    std::vector<EsoFormula> parts;
    flatten_and(s.matrix, parts);
    for (const auto& p : parts) conjuncts_.push_back(compile(p));
  }

  std::vector<Instance> instances() const {
    std::vector<Instance> out;
    const std::size_t r = s_.universals.size();
    for (const auto& c : conjuncts_) {
      std::vector<bool> used(r, false);
      mark_used(c, used);
      std::vector<std::size_t> positions;
      for (std::size_t i = 0; i < r; ++i)
        if (used[i]) positions.push_back(i);
      if (n_ == 0 && !positions.empty()) continue;
      const std::size_t count = power(n_, positions.size());
      for (std::size_t code = 0; code < count; ++code) {
        Instance inst{&c, std::vector<Element>(r, 0)};
        std::size_t rest = code;
        for (std::size_t j = positions.size(); j-- > 0;) {
          inst.values[positions[j]] = static_cast<Element>(rest % n_);
          rest /= n_;
        }
        out.push_back(std::move(inst));
      }
    }
    return out;
  }

  bool solve(std::vector<Instance> pending) {
    std::vector<Instance> open;
    std::optional<std::size_t> branch;
    for (auto& inst : pending) {
      std::optional<std::size_t> blocking;
      const Truth t = eval(*inst.formula, inst.values, blocking);
      if (t == Truth::False) return false;
      if (t == Truth::Unknown) {
        if (!branch) branch = blocking;
        open.push_back(std::move(inst));
      }
    }
    if (open.empty()) return true;
    const std::size_t cell = *branch;
    const std::size_t domain = is_function_cell(cell) ? n_ : 2;
    for (std::size_t v = 0; v < domain; ++v) {
      if (limits_.max_witness_functions && steps_ >= *limits_.max_witness_functions)
        throw LimitExceeded("ESO search exceeded " + std::to_string(*limits_.max_witness_functions) +
                            " interpretation steps");
      ++steps_;
      values_[cell] = static_cast<std::int32_t>(v);
      if (solve(open)) return true;
    }
    values_[cell] = kUnset;
    return false;
  }

  void load(const EsoWitness& w) {
    for (const auto& sym : symbols_) {
      std::vector<std::int32_t> table(sym.cells, kUnset);
      if (sym.function) {
        auto it = w.functions.find(sym.name);
        if (it == w.functions.end() || it->second.size() != sym.cells)
          throw UsageError("interpretation of '" + sym.name + "' missing or of wrong size");
        for (std::size_t i = 0; i < sym.cells; ++i) {
          if (it->second[i] >= n_) throw UsageError("function value outside the domain");
          table[i] = static_cast<std::int32_t>(it->second[i]);
        }
      } else {
        auto it = w.relations.find(sym.name);
        if (it == w.relations.end() || it->second.size() != sym.cells)
          throw UsageError("interpretation of '" + sym.name + "' missing or of wrong size");
        for (std::size_t i = 0; i < sym.cells; ++i) table[i] = it->second[i] ? 1 : 0;
      }
      std::copy(table.begin(), table.end(), values_.begin() + static_cast<std::ptrdiff_t>(sym.offset));
    }
  }

  EsoWitness witness() const {
    EsoWitness w;
    for (const auto& sym : symbols_) {
      auto cell = [&](std::size_t i) { return std::max(values_[sym.offset + i], std::int32_t{0}); };
      if (sym.function) {
        auto& table = w.functions[sym.name];
        for (std::size_t i = 0; i < sym.cells; ++i) table.push_back(static_cast<Element>(cell(i)));
      } else {
        auto& table = w.relations[sym.name];
        for (std::size_t i = 0; i < sym.cells; ++i) table.push_back(cell(i) == 1);
      }
    }
    return w;
  }

  std::uint64_t steps() const { return steps_; }

 private:
  CTerm compile(const Term& t) const {
    CTerm out;
    if (t.is_variable()) {
      out.index = static_cast<std::size_t>(
          std::find(s_.universals.begin(), s_.universals.end(), t.name()) - s_.universals.begin());
      return out;
    }
    out.variable = false;
    out.index = symbol_id(t.name(), true);
    for (const auto& a : t.arguments()) out.args.push_back(compile(a));
    return out;
  }

  CFormula compile(const EsoFormula& f) const {
    CFormula out{f.kind()};
    for (const auto& t : f.terms()) out.terms.push_back(compile(t));
    for (const auto& c : f.children()) out.children.push_back(compile(c));
    if (f.kind() == EsoKind::Atom) {
      if (s_.find_relation(f.relation())) {
        out.relation = symbol_id(f.relation(), false);
      } else {
        if (!m_.has_relation(f.relation()))
          throw UsageError("relation '" + f.relation() + "' is neither quantified nor in the structure");
        out.fixed = &m_.relation(f.relation());
        if (out.fixed->arity() != f.terms().size())
          throw UsageError("relation '" + f.relation() + "' applied with wrong arity");
      }
    }
    return out;
  }

  std::size_t symbol_id(const std::string& name, bool function) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i].function == function && symbols_[i].name == name) return i;
    throw UsageError("undeclared symbol '" + name + "'");
  }

  static void mark_used(const CTerm& t, std::vector<bool>& used) {
    if (t.variable) {
      used[t.index] = true;
      return;
    }
    for (const auto& a : t.args) mark_used(a, used);
  }

  static void mark_used(const CFormula& f, std::vector<bool>& used) {
    for (const auto& t : f.terms) mark_used(t, used);
    for (const auto& c : f.children) mark_used(c, used);
  }

  bool is_function_cell(std::size_t cell) const {
    for (const auto& sym : symbols_)
      if (cell >= sym.offset && cell < sym.offset + sym.cells) return sym.function;
    return true;
  }

  std::size_t cell_of(const Symbol& sym, const std::vector<Element>& args) const {
    std::size_t code = 0;
    for (Element a : args) code = code * n_ + a;
    return sym.offset + code;
  }

  std::optional<Element> term_value(const CTerm& t, const std::vector<Element>& env,
                                    std::optional<std::size_t>& blocking) const {
    if (t.variable) return env[t.index];
    std::vector<Element> args;
    args.reserve(t.args.size());
    for (const auto& a : t.args) {
      auto v = term_value(a, env, blocking);
      if (!v) return std::nullopt;
      args.push_back(*v);
    }
    const std::size_t cell = cell_of(symbols_[t.index], args);
    if (values_[cell] == kUnset) {
      if (!blocking) blocking = cell;
      return std::nullopt;
    }
    return static_cast<Element>(values_[cell]);
  }

  Truth eval(const CFormula& f, const std::vector<Element>& env, std::optional<std::size_t>& blocking) const {
    switch (f.kind) {
      case EsoKind::Atom: {
        std::vector<Element> args;
        args.reserve(f.terms.size());
        for (const auto& t : f.terms) {
          auto v = term_value(t, env, blocking);
          if (!v) return Truth::Unknown;
          args.push_back(*v);
        }
        if (f.fixed) return f.fixed->contains(args) ? Truth::True : Truth::False;
        const std::size_t cell = cell_of(symbols_[f.relation], args);
        if (values_[cell] == kUnset) {
          if (!blocking) blocking = cell;
          return Truth::Unknown;
        }
        return values_[cell] == 1 ? Truth::True : Truth::False;
      }
      case EsoKind::Equal: {
        auto a = term_value(f.terms[0], env, blocking);
        if (!a) return Truth::Unknown;
        auto b = term_value(f.terms[1], env, blocking);
        if (!b) return Truth::Unknown;
        return *a == *b ? Truth::True : Truth::False;
      }
      case EsoKind::Not: {
        const Truth t = eval(f.children[0], env, blocking);
        return t == Truth::Unknown ? t : t == Truth::True ? Truth::False : Truth::True;
      }
      case EsoKind::And:
      case EsoKind::Or:
      case EsoKind::Implies: {
        // `dominant` decides the connective on its own; the other value is neutral.
        const Truth dominant = f.kind == EsoKind::And ? Truth::False : Truth::True;
        std::optional<std::size_t> left_blocking;
        std::optional<std::size_t> right_blocking;
        Truth lhs = eval(f.children[0], env, left_blocking);
        if (f.kind == EsoKind::Implies && lhs != Truth::Unknown)
          lhs = lhs == Truth::True ? Truth::False : Truth::True;
        if (lhs == dominant) return dominant;
        const Truth rhs = eval(f.children[1], env, right_blocking);
        if (rhs == dominant) return dominant;
        if (lhs == Truth::Unknown || rhs == Truth::Unknown) {
          if (!blocking) blocking = lhs == Truth::Unknown ? left_blocking : right_blocking;
          return Truth::Unknown;
        }
        return lhs;
      }
    }
    return Truth::Unknown;
  }

  const Structure& m_;
  const EsoSentence& s_;
  EvalLimits limits_;
  std::size_t n_;
  std::vector<Symbol> symbols_;
  std::vector<CFormula> conjuncts_;
  std::vector<std::int32_t> values_;
  std::uint64_t steps_ = 0;
};

}  // namespace

EsoResult evaluate_eso_detailed(const Structure& structure, const EsoSentence& sentence, const EvalLimits& limits) {
  EsoSearch search(structure, sentence, limits);
  EsoResult out;
  out.verdict = search.solve(search.instances());
  out.steps = search.steps();
  if (out.verdict) out.witness = search.witness();
  return out;
}

bool evaluate_eso(const Structure& structure, const EsoSentence& sentence, const EvalLimits& limits) {
  return evaluate_eso_detailed(structure, sentence, limits).verdict;
}

bool eso_holds_under(const Structure& structure, const EsoSentence& sentence, const EsoWitness& interpretation) {
  EsoSearch search(structure, sentence, EvalLimits{});
  search.load(interpretation);
  return search.solve(search.instances());
}

}  // namespace teamlogic
