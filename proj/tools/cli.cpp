#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>

#include "teamlogic/analysis.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/eso.hpp"
#include "teamlogic/harness.hpp"
#include "teamlogic/model_io.hpp"
#include "teamlogic/oracle.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/prenex.hpp"
#include "teamlogic/semantics.hpp"

namespace teamlogic::cli {

namespace {

struct LimitFlags {
  std::uint64_t max_split = 10'000'000;
  std::uint64_t max_witness = 10'000'000;
  std::uint64_t max_team_rows = 4096;

  void attach(CLI::App& app) {
    app.add_option("--max-split", max_split, "Disjunction split candidates per evaluation")->capture_default_str();
    app.add_option("--max-witness", max_witness, "Existential witness steps per evaluation")->capture_default_str();
    app.add_option("--max-team-rows", max_team_rows, "Largest intermediate team")->capture_default_str();
  }

  EvalLimits limits() const {
    EvalLimits l;
    l.max_split_candidates = max_split;
    l.max_witness_functions = max_witness;
    l.max_team_rows = max_team_rows;
    return l;
  }
};

/// A formula given inline or through --file.
struct FormulaInput {
  std::string text;
  std::string file;

  void attach(CLI::App& app, const std::string& positional = "formula") {
    app.add_option(positional, text, "Formula text");
    app.add_option("--file", file, "Read the formula from a file");
  }

  std::string source() const {
    if (!file.empty() && !text.empty()) throw UsageError("give the formula inline or with --file, not both");
    if (!file.empty()) return read_file(file);
    if (text.empty()) throw UsageError("missing formula");
    return text;
  }

  Formula formula() const { return parse_formula(source()); }
};

const std::map<std::string, SemanticsMode> kModes{{"strict", SemanticsMode::Strict}, {"lax", SemanticsMode::Lax}};

std::uint64_t seed_from_environment(std::uint64_t fallback) {
  if (const char* env = std::getenv("TEAMLOGIC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("TEAMLOGIC_SEED is not a number: ") + env);
    }
  }
  return fallback;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Team semantics workbench for FO(dep, ind, inc)", "teamlogic"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Evaluate a formula on a structure and team");
  std::string structure_file, team_file;
  SemanticsMode check_mode = SemanticsMode::Strict;
  bool trace = false;
  FormulaInput check_input;
  LimitFlags check_limits;
  check->add_option("--structure", structure_file, "Structure file")->required();
  check->add_option("--team", team_file, "Team file; defaults to the team holding the empty assignment");
  check->add_option("--semantics", check_mode, "strict or lax")->transform(CLI::CheckedTransformer(kModes));
  check->add_flag("--trace", trace, "Print the witnessing splits and extensions");
  check_input.attach(*check);
  check_limits.attach(*check);

  // prenex
  auto* prenex = app.add_subcommand("prenex", "Prenex normal form of a sentence");
  bool normalize = false;
  FormulaInput prenex_input;
  prenex->add_flag("--normalize", normalize, "Rename re-used bound variables first");
  prenex_input.attach(*prenex, "sentence");

  // translate
  auto* translate = app.add_subcommand("translate", "Translate to ESO or to inclusion logic");
  std::string target;
  std::string eso_file;
  bool validate_durand = false;
  FormulaInput translate_input;
  translate->add_option("--to", target, "eso or inc")->required()->check(CLI::IsMember({"eso", "inc"}));
  translate->add_option("--input", eso_file, "ESO sentence file for --to inc");
  translate->add_flag("--validate-durand", validate_durand, "Print the Durand-form profile");
  translate_input.attach(*translate, "sentence");

  // classify
  auto* classify = app.add_subcommand("classify", "Print the fragment profile of a formula");
  FormulaInput classify_input;
  classify_input.attach(*classify);

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Bounded equivalence check of two formulas");
  std::string vocab;
  std::string lhs_text, rhs_text;
  SemanticsMode equiv_mode = SemanticsMode::Strict;
  OracleBounds bounds;
  std::optional<std::size_t> max_rows;
  bool key_values = false;
  LimitFlags equiv_limits;
  equiv->add_option("--vocab", vocab, "Relation symbols, e.g. P/1,E/2");
  equiv->add_option("--min-size", bounds.min_size, "Smallest structure")->capture_default_str();
  equiv->add_option("--max-size", bounds.max_size, "Largest structure")->capture_default_str();
  equiv->add_option("--max-rows", max_rows, "Largest team for open formulas");
  equiv->add_option("--semantics", equiv_mode, "strict or lax")->transform(CLI::CheckedTransformer(kModes));
  equiv->add_flag("--key-values", key_values, "Print key=value lines");
  equiv->add_option("lhs", lhs_text, "First formula")->required();
  equiv->add_option("rhs", rhs_text, "Second formula")->required();
  equiv_limits.attach(*equiv);

  // harness
  auto* harness = app.add_subcommand("harness", "Run the registered claim checks");
  std::optional<std::string> claim;
  std::uint64_t seed = 0;
  bool full_scale = false;
  bool list = false;
  harness->add_option("--claim", claim, "Run only this claim");
  harness->add_option("--seed", seed, "Corpus seed; TEAMLOGIC_SEED overrides it");
  harness->add_flag("--full", full_scale, "Use the acceptance-scale corpora");
  harness->add_flag("--list", list, "List the registered claims");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      const Structure m = parse_structure(read_file(structure_file));
      const Team x = team_file.empty() ? Team::unit() : parse_team(read_file(team_file));
      EvalOptions options;
      options.record_trace = trace;
      const EvalResult r = evaluate_detailed(m, x, check_input.formula(), check_mode, check_limits.limits(), options);
      out << (r.verdict ? "true" : "false") << '\n';
      for (const auto& w : r.warnings) err << "warning: " << w << '\n';
      if (trace && r.trace) out << *r.trace;
      return r.verdict ? 0 : 1;
    }
    if (*prenex) {
      PrenexOptions options;
      options.normalize_variables = normalize;
      out << to_string(to_prenex_normal_form(prenex_input.formula(), options)) << '\n';
      return 0;
    }
    if (*translate) {
      if (target == "eso") {
        if (!eso_file.empty()) throw UsageError("--input takes an ESO file and only applies to --to inc");
        const Formula sentence = translate_input.formula();
        std::optional<EsoSentence> eso;
        try {
          eso = fo_to_eso(sentence);
        } catch (const UsageError&) {
          eso = sentence_to_eso(sentence);
        }
        out << to_string(*eso) << '\n';
        return 0;
      }
      std::string text;
      if (!eso_file.empty() && !translate_input.text.empty())
        throw UsageError("give the ESO sentence inline or with --input, not both");
      if (!eso_file.empty()) {
        text = read_file(eso_file);
      } else {
        text = translate_input.source();
      }
      const EsoSentence sentence = parse_eso(text);
      const DurandProfile profile = validate_durand_form(sentence);
      if (validate_durand) out << to_string(profile) << '\n';
      if (!profile.valid) {
        for (const auto& d : profile.diagnostics) err << "error: " << d << '\n';
        return 2;
      }
      out << to_string(eso_to_inclusion(sentence, profile)) << '\n';
      return 0;
    }
    if (*classify) {
      out << to_string(classify_fragment(classify_input.formula()));
      return 0;
    }
    if (*equiv) {
      const Formula lhs = parse_formula(lhs_text);
      const Formula rhs = parse_formula(rhs_text);
      const Vocabulary v = vocab.empty() ? vocabulary_of(lhs).merged(vocabulary_of(rhs)) : Vocabulary::parse(vocab);
      bounds.max_rows = max_rows;
      const bool sentences = free_variables(lhs).empty() && free_variables(rhs).empty();
      const EquivalenceReport report =
          sentences ? check_sentence_equivalence(lhs, rhs, v, equiv_mode, bounds, equiv_limits.limits())
                    : check_open_equivalence(lhs, rhs, v, equiv_mode, bounds, equiv_limits.limits());
      out << (key_values ? to_key_values(report) : to_string(report));
      switch (report.verdict) {
        case EquivalenceVerdict::EquivalentUpToBound: return 0;
        case EquivalenceVerdict::Counterexample: return 1;
        case EquivalenceVerdict::Inconclusive: return 2;
      }
    }
    if (*harness) {
      if (list) {
        for (const auto& c : claim_registry()) out << c.name << ": " << c.statement << '\n';
        return 0;
      }
      HarnessOptions options;
      options.seed = seed_from_environment(seed);
      options.scale = full_scale ? HarnessScale::Full : HarnessScale::Quick;
      bool all = true;
      for (const auto& r : run_harness(options, claim)) {
        out << to_string(r) << '\n';
        all = all && r.passed;
      }
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace teamlogic::cli
