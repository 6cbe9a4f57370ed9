#pragma once

#include <pontcalc/ideal.hpp>

#include <string_view>
#include <utility>

namespace pontcalc {

// Syntax for containment checks (whitespace-insensitive except around the
// `subset` keyword):
//   check  := expr 'subset' expr ;
//   expr   := term ( '+' term )* ;
//   term   := factor ( '*' factor )* ;
//   factor := atom ( '^' nat )? ;
//   atom   := 'J' '(' int ')' | 'L' | '(' expr ')' ;
std::pair<IdealExpr, IdealExpr> parse_ideal_check(std::string_view text, int r);

IdealExpr parse_ideal_expr(std::string_view text, int r);

}  // namespace pontcalc
