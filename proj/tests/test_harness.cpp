#include <set>

#include "doctest.h"
#include "teamlogic/error.hpp"
#include "teamlogic/harness.hpp"

using namespace teamlogic;

TEST_CASE("registry covers every claim") {
  const std::set<std::string> expected{
      "example-strict-disjunction", "thm-flatness",         "prop-strict-lax",     "prop-empty-team",
      "prop-downward-closure",      "prop-dep-strict-lax",  "prop-lax-locality",   "lemma-restricted-locality",
      "lemma-renaming",             "lemma-relativization", "lemma-contraction",   "thm-dep-independence",
      "thm-prenex",                 "prop-eso-translation", "thm-eso-inclusion",
  };
  std::set<std::string> registered;
  for (const auto& c : claim_registry()) {
    CHECK_FALSE(c.statement.empty());
    CHECK(static_cast<bool>(c.run));
    CHECK(registered.insert(c.name).second);
  }
  CHECK(registered == expected);
  CHECK(find_claim("thm-prenex") != nullptr);
  CHECK(find_claim("thm-nothing") == nullptr);
  CHECK_THROWS_AS(run_harness({}, std::string("thm-nothing")), UsageError);
}

TEST_CASE("quick harness passes") {
  for (std::uint64_t seed : {0, 1}) {
    HarnessOptions options;
    options.seed = seed;
    for (const auto& r : run_harness(options)) {
      CHECK_MESSAGE(r.passed, to_string(r));
      CHECK(r.cases > 0);
      CHECK(to_string(r).rfind("PASS " + r.name + " cases=", 0) == 0);
    }
  }
}

TEST_CASE("claim runs are reproducible") {
  HarnessOptions options;
  options.seed = 3;
  const auto a = run_harness(options, std::string("prop-strict-lax"));
  const auto b = run_harness(options, std::string("prop-strict-lax"));
  CHECK(a.front().cases == b.front().cases);
  CHECK(a.front().skipped == b.front().skipped);
}
