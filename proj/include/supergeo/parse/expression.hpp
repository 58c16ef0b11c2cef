#pragma once

#include "supergeo/core/chart.hpp"
#include "supergeo/core/super_scalar.hpp"

#include <string>

namespace supergeo {

// Parses one expression against a chart's coordinates, odd generators,
// and declared function symbols.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] atom ['^' nat]
//   atom   := number | ident | ident '(' ident-list ')' | '(' expr ')'
//
// Numbers are nonnegative integer literals; identifiers are coordinate
// names, odd generator names, symbol names, or derived symbol names like
// "h_xy" (resolved by peeling coordinate suffixes).  A call-form atom
// must list the symbol's declared dependencies verbatim.  Failures throw
// ParseError carrying the byte offset.
SuperScalar parseExpression(const std::string& text, const Chart& chart);

}  // namespace supergeo
