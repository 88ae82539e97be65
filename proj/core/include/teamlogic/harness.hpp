#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "teamlogic/eso.hpp"

namespace teamlogic {

enum class HarnessScale {
  /// Reduced corpora for routine runs.
  Quick,
  /// Corpus sizes and structure bounds of the acceptance suite.
  Full,
};

struct HarnessOptions {
  std::uint64_t seed = 0;
  HarnessScale scale = HarnessScale::Quick;
};

struct ClaimResult {
  std::string name;
  bool passed = false;
  /// Individual checks that ran to completion.
  std::uint64_t cases = 0;
  /// Checks abandoned because an evaluation limit ran out.
  std::uint64_t skipped = 0;
  std::string detail;
  double seconds = 0.0;
};

struct Claim {
  std::string name;
  std::string statement;
  std::function<ClaimResult(const HarnessOptions&)> run;
};

/// Every registered claim check, in a fixed order.
const std::vector<Claim>& claim_registry();
const Claim* find_claim(const std::string& name);

/// Runs one claim, or all of them. Throws UsageError for unknown names.
std::vector<ClaimResult> run_harness(const HarnessOptions& options, const std::optional<std::string>& claim = {});

/// One-line summary: `PASS name cases=.. skipped=.. seconds=.. detail`.
std::string to_string(const ClaimResult& result);

/// Hand-built Skolem sentences in Durand normal form, with the vocabulary they use.
struct DurandCase {
  std::string text;
  std::string vocabulary;
};
const std::vector<DurandCase>& durand_suite();
/// Sentences the validator must reject.
const std::vector<std::string>& durand_invalid_fixtures();

/// Decodes a strict witness of the inclusion translation back into function
/// tables: f(a) is the y_f value of the row whose universals equal a. Returns
/// nothing when the team does not define every table entry exactly once.
std::optional<EsoWitness> functions_from_team(const Structure& structure, const EsoSentence& sentence,
                                              const Formula& translation, const Team& leaf);

}  // namespace teamlogic
