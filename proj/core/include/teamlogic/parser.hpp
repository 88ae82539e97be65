#pragma once

#include <string_view>

#include "teamlogic/formula.hpp"

namespace teamlogic {

/// Parse a formula in the ASCII grammar:
///
///     formula := disj ; disj := conj ("|" conj)* ; conj := quant ("&" quant)*
///     quant   := ("A" var "." | "E" var ".") quant | unit
///     unit    := atom | literal | "(" formula ")"
///     atom    := "dep(" varlist? ";" var ")"
///              | "ind(" varlist? ";" varlist ";" varlist ")"
///              | "inc(" varlist ";" varlist ")"
///     literal := ["!"] ident "(" varlist ")" | var ("=" | "!=") var
///
/// `&` and `|` associate to the left. Throws ParseError with line/column.
Formula parse_formula(std::string_view text);

}  // namespace teamlogic
