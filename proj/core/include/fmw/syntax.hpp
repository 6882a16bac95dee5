#pragma once

#include <string>
#include <string_view>

#include "fmw/formula.hpp"

namespace fmw {

/// ASCII concrete syntax.
///
///   Ex phi, Ax phi           first-order quantifiers (E/A glued to the variable)
///   EQ:2 phi, AQ:2 phi       second-order quantifiers with arity
///   ~  &  |  ->              negation, conjunction, disjunction, implication
///                            (`v` is accepted for `|`); `->` is right associative
///   R(x,y)  x = y  x != y  x < y  BIT(x,y)
///   TC[x,y: phi](s,t)        2k bound variables, 2k arguments
///   LFP[Q,x,y: phi](s,t)     PFP likewise
///   CHAR_ORD{len:hex;...}    reserved leaves, one payload per `;`
///
/// Quantifiers extend as far to the right as possible only through unary
/// operators; `Ex P(x) & Q(x)` parses as `(Ex P(x)) & Q(x)`.
/// Throws SyntaxError with a byte offset, or IllFormedFormula from the
/// constructors.
Formula parse_formula(std::string_view text);

/// Canonical rendering; parse_formula(print_formula(f)) == f. Binary
/// connectives are always parenthesized.
std::string print_formula(const Formula& f);

}  // namespace fmw
