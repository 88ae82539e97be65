#pragma once

#include <string>

#include "teamlogic/model_io.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/structure.hpp"
#include "teamlogic/team.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(TEAMLOGIC_FIXTURE_DIR) + "/" + name; }

inline teamlogic::Structure three_elements() { return teamlogic::Structure(3); }

/// The counterexample team over u, v, w with rows s0, s1, s3.
inline teamlogic::Team uvw_team() { return teamlogic::Team({"u", "v", "w"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}); }

inline teamlogic::Formula f(const std::string& text) { return teamlogic::parse_formula(text); }

}  // namespace testing
