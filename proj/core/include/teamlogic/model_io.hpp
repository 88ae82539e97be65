#pragma once

#include <string>
#include <string_view>

#include "teamlogic/structure.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

/// Structure file:
///
///     domain = 3
///     constant c = 1
///     relation P/1 = {0, 2}
///     relation E/2 = {(0,1), (1,2)}
///
/// Whitespace-insensitive; `#` comments. Unary tuples may omit parentheses.
Structure parse_structure(std::string_view text);
std::string format_structure(const Structure& structure);

/// Team file: `vars u v w` followed by one `row 0 1 2` line per assignment.
Team parse_team(std::string_view text);
std::string format_team(const Team& team);

/// Reads a whole file; throws UsageError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace teamlogic
