// Acceptance suite: one PASS/FAIL line per criterion, full-scale corpora.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "teamlogic/harness.hpp"

using namespace teamlogic;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> claims;
  double seconds_limit;
};

const std::vector<Criterion> kCriteria{
    {1, "strict disjunction counterexample", {"example-strict-disjunction"}, 1.0},
    {2, "flatness", {"thm-flatness"}, 120.0},
    {3, "strict implies lax, empty team", {"prop-strict-lax", "prop-empty-team"}, 300.0},
    {4, "dependence logic properties", {"prop-downward-closure", "prop-dep-strict-lax"}, 300.0},
    {5, "locality", {"prop-lax-locality", "lemma-restricted-locality"}, 300.0},
    {6, "relativization and contraction", {"lemma-relativization", "lemma-contraction"}, 600.0},
    {7, "prenex normal form", {"thm-prenex"}, 1800.0},
    {8, "translation to ESO", {"prop-eso-translation"}, 1800.0},
    {9, "ESO to inclusion logic", {"thm-eso-inclusion"}, 1800.0},
};

const std::set<std::string> kExpectedClaims{
    "example-strict-disjunction", "thm-flatness",         "prop-strict-lax",    "prop-empty-team",
    "prop-downward-closure",      "prop-dep-strict-lax",  "prop-lax-locality",  "lemma-restricted-locality",
    "lemma-renaming",             "lemma-relativization", "lemma-contraction",  "thm-dep-independence",
    "thm-prenex",                 "prop-eso-translation", "thm-eso-inclusion",
};

std::uint64_t seed() {
  const char* env = std::getenv("TEAMLOGIC_SEED");
  return env ? std::strtoull(env, nullptr, 10) : 0;
}

}  // namespace

int main() {
  HarnessOptions full;
  full.scale = HarnessScale::Full;
  full.seed = seed();
  bool all = true;

  for (const auto& c : kCriteria) {
    bool passed = true;
    double seconds = 0.0;
    std::string details;
    for (const auto& name : c.claims) {
      const ClaimResult r = run_harness(full, name).front();
      passed = passed && r.passed;
      seconds += r.seconds;
      details += " [" + to_string(r) + "]";
    }
    const bool in_time = seconds < c.seconds_limit;
    std::printf("criterion %2d %s %s: %.2f s (limit %.0f s)%s\n", c.number, passed && in_time ? "PASS" : "FAIL",
                c.title.c_str(), seconds, c.seconds_limit, details.c_str());
    all = all && passed && in_time;
  }

  std::set<std::string> registered;
  for (const auto& c : claim_registry()) registered.insert(c.name);
  const auto start = std::chrono::steady_clock::now();
  HarnessOptions quick;
  quick.seed = full.seed;
  std::size_t failing = 0;
  for (const auto& r : run_harness(quick)) failing += r.passed ? 0 : 1;
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool complete = registered == kExpectedClaims;
  std::printf("criterion 10 %s harness registry: %zu of %zu claims registered, %zu failing in the default run: %.2f s\n",
              complete && failing == 0 ? "PASS" : "FAIL", registered.size(), kExpectedClaims.size(), failing, seconds);
  all = all && complete && failing == 0;
  return all ? 0 : 1;
}
