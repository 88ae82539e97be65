#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "support.hpp"
#include "teamlogic/parser.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = teamlogic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_CASE("check") {
  const std::string structure = testing::fixture("three.structure");
  const std::string team = testing::fixture("uvw.team");
  auto r = run({"check", "--structure", structure, "--team", team, "inc(u; v) | inc(w; v)"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
  r = run({"check", "--structure", structure, "--team", team, "--semantics", "lax", "inc(u; v) | inc(w; v)"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = run({"check", "--structure", structure, "--team", team, "--trace", "A x. (inc(w; x) & (inc(u; v) | inc(w; v)))"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "true");
  CHECK(r.out.size() > 5);
  r = run({"check", "--structure", structure, "A x. E y. x != y"});
  CHECK(r.code == 0);
}

TEST_CASE("errors exit with 2") {
  const std::string structure = testing::fixture("three.structure");
  auto r = run({"check", "--structure", structure, "inc(u; v"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(run({"check", "--structure", "/nonexistent/file", "P(x)"}).code == 2);
  CHECK(run({"check", "--structure", structure, "--semantics", "loose", "x = x"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"check", "--structure", structure, "--max-split", "1", "--team", testing::fixture("uvw.team"),
             "inc(u; v) | inc(w; v)"})
            .code == 2);
  CHECK(run({"harness", "--claim", "no-such-claim"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("prenex and classify") {
  auto r = run({"prenex", "(A x. P(x)) & E z. Q(z)"});
  CHECK(r.code == 0);
  CHECK_NOTHROW(teamlogic::parse_formula(first_line(r.out)));
  CHECK(run({"prenex", "A x. P(x) & E x. Q(x)"}).code == 2);
  CHECK(run({"prenex", "--normalize", "A x. P(x) & E x. Q(x)"}).code == 0);

  r = run({"classify", "A x. A y. E z. inc(x z; x y)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("universal_count=2\n") != std::string::npos);
}

TEST_CASE("translate") {
  auto r = run({"translate", "--to", "eso", "A x1. E y1. P(y1)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("S(x1) -> P(f_y1(x1))") != std::string::npos);

  r = run({"translate", "--to", "inc", "--validate-durand",
           "exists f/1 g/1 . forall x . P(f(x)) & g(f(x)) = x & Q(g(x))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("valid=true") != std::string::npos);
  const std::string last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  CHECK_NOTHROW(teamlogic::parse_formula(last));

  r = run({"translate", "--to", "inc", "exists f/1 . forall x . f(f(x)) = x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("both inner and outer") != std::string::npos);
  CHECK(run({"translate", "--to", "xml", "P(x)"}).code == 2);
}

TEST_CASE("equiv") {
  auto r = run({"equiv", "--vocab", "P/1,Q/1", "--max-size", "3", "(A x. P(x)) & E z. Q(z)", "A x. E z. (P(x) & Q(z))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("equivalent-up-to-bound") != std::string::npos);
  r = run({"equiv", "--key-values", "inc(u; v)", "inc(v; u)"});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict=counterexample\n") != std::string::npos);
  CHECK(r.out.find("counterexample_team=") != std::string::npos);
  r = run({"equiv", "--max-split", "1", "--max-size", "3", "inc(u; v) | inc(v; u)", "inc(u; v) | inc(v; u)"});
  CHECK(r.code == 2);
}

TEST_CASE("harness") {
  auto r = run({"harness", "--list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lemma-contraction") != std::string::npos);
  r = run({"harness", "--claim", "lemma-contraction"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS lemma-contraction", 0) == 0);
  setenv("TEAMLOGIC_SEED", "5", 1);
  CHECK(run({"harness", "--claim", "thm-dep-independence"}).code == 0);
  setenv("TEAMLOGIC_SEED", "five", 1);
  CHECK(run({"harness", "--claim", "thm-dep-independence"}).code == 2);
  unsetenv("TEAMLOGIC_SEED");
}
