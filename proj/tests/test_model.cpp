#include "doctest.h"
#include "support.hpp"
#include "teamlogic/enumerate.hpp"
#include "teamlogic/error.hpp"

using namespace teamlogic;

TEST_CASE("universal extension") {
  const Structure m = testing::three_elements();
  CHECK(universal_extension(Team::unit(), "x", m).size() == 3);
  const Team x = testing::uvw_team();
  const Team ext = universal_extension(x, "x", m);
  CHECK(ext.size() == 9);
  CHECK(ext.vars() == VariableList{"u", "v", "w", "x"});
  CHECK(restrict(ext, {"u", "v", "w"}) == x);
  CHECK(universal_extension(Team::empty({"u"}), "x", m).empty());
  CHECK_THROWS_AS(universal_extension(x, "u", m), UsageError);
}

TEST_CASE("strict and lax extensions") {
  const Team x = testing::uvw_team();
  const Team constant = strict_extension(x, "y", std::vector<Element>{1, 1, 1});
  CHECK(constant.size() == 3);
  CHECK(project(constant, {"y"}) == std::set<Tuple>{{1}});
  const Team fn = strict_extension(x, "y", [](const Assignment& s) { return s.at("u"); });
  CHECK(project(fn, {"u", "y"}) == std::set<Tuple>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(strict_extension(Team::empty({"u"}), "y", std::vector<Element>{}).empty());

  const std::vector<std::vector<Element>> all(3, {0, 1, 2});
  CHECK(lax_extension(x, "y", all) == universal_extension(x, "y", testing::three_elements()));
  CHECK(lax_extension(x, "y", std::vector<std::vector<Element>>{{1}, {1}, {1}}) == constant);
  CHECK(lax_extension(Team::empty({"u"}), "y", std::vector<std::vector<Element>>{}).empty());
  CHECK_THROWS_AS(lax_extension(x, "y", std::vector<std::vector<Element>>{{1}, {}, {2}}), UsageError);
}

TEST_CASE("projection, selection, restriction on the counterexample team") {
  const Team x = testing::uvw_team();
  CHECK(project(x, {"u"}) == std::set<Tuple>{{0}, {1}, {2}});
  CHECK(project(x, {"v"}) == std::set<Tuple>{{0}, {1}});
  const Team s1 = select(x, {"w"}, std::vector<Element>{1});
  REQUIRE(s1.size() == 1);
  CHECK(s1.rows()[0] == Tuple{1, 0, 1});
  CHECK(restrict(x, {"u", "v", "w"}) == x);
  CHECK(restrict(x, {"v"}).size() == 2);
  CHECK_THROWS_AS(project(x, {"q"}), UsageError);
}

TEST_CASE("selections partition the team") {
  const Team x = testing::uvw_team();
  for (const auto& vars : {VariableList{"v"}, VariableList{"u", "w"}}) {
    Team united = Team::empty(x.vars());
    std::size_t total = 0;
    for (const auto& a : all_tuples(3, vars.size())) {
      const Team part = select(x, vars, a);
      total += part.size();
      united = united.united(part);
    }
    CHECK(united == x);
    CHECK(total == x.size());
  }
}

TEST_CASE("teams are sets over sorted columns") {
  const Team a({"w", "u"}, {{2, 0}, {2, 0}, {1, 1}});
  CHECK(a.vars() == VariableList{"u", "w"});
  CHECK(a.size() == 2);
  CHECK(a.rows()[0] == Tuple{0, 2});
  CHECK(Team::unit().size() == 1);
  CHECK(Team().empty());
}

TEST_CASE("structure enumeration counts") {
  auto count = [](const std::string& vocab, std::size_t max, std::size_t min) {
    return enumerate_structures(Vocabulary::parse(vocab), max, min).size();
  };
  CHECK(count("P/1", 2, 2) == 4);
  CHECK(count("", 3, 2) == 2);
  CHECK(count("E/2", 2, 2) == 16);
  CHECK(count("P/1,E/2", 3, 2) == 64 + 8 * 512);
  CHECK(StructureEnumerator::count_for_size(Vocabulary::parse("P/1 c"), 3) == 8 * 3);
}

TEST_CASE("team enumeration counts") {
  const Structure two(2);
  CHECK(enumerate_teams(two, {"x", "y"}).size() == 16);
  CHECK(enumerate_teams(two, {}).size() == 2);
  CHECK(enumerate_teams(two, {"x", "y", "z"}).size() == 256);
  CHECK(enumerate_teams(Structure(3), {"x", "y"}, 1).size() == 10);
  CHECK_THROWS_AS(TeamEnumerator(3, {"x", "y", "z"}, std::nullopt, 1000), LimitExceeded);
}

TEST_CASE("structure and team files") {
  const Structure m = parse_structure(read_file(testing::fixture("three.structure")));
  CHECK(m.size() == 3);
  CHECK(parse_team(read_file(testing::fixture("uvw.team"))) == testing::uvw_team());

  const Structure s = parse_structure(
      "domain = 3 # comment\n"
      "constant c = 1\n"
      "relation P/1 = {0, 2}\n"
      "relation E/2 = {(0,1), (1,2)}\n");
  CHECK(s.holds("P", std::vector<Element>{2}));
  CHECK_FALSE(s.holds("P", std::vector<Element>{1}));
  CHECK(s.holds("E", std::vector<Element>{1, 2}));
  CHECK(s.constant("c") == Element{1});
  CHECK(parse_structure(format_structure(s)) == s);
  CHECK(parse_team(format_team(testing::uvw_team())) == testing::uvw_team());

  CHECK_THROWS_AS(parse_structure("domain = 2\nrelation P/1 = {5}\n"), Error);
  CHECK_THROWS_AS(parse_structure("relation P/1 = {0}\n"), Error);
  CHECK_THROWS_AS(parse_team("vars x\nrow 0 1\n"), Error);
}
