#pragma once

#include "fmw/formula.hpp"
#include "fmw/structure.hpp"

namespace fmw {

/// {R:1, <}
Vocabulary ordered_source_vocab();
/// {R:2}
Vocabulary unordered_source_vocab();

/// Moves a sentence over {R:1, <} to an ordered target vocabulary. R(t)
/// becomes R1(t) when the first target symbol is unary, otherwise
/// Ey R1(y,...,y,t) with y the least of y1, y2, ... not occurring in the
/// sentence.
Formula apply_T_ord(const Formula& upsilon, const Vocabulary& tau);

/// Moves a sentence over {R:2} to an unordered, non-Aristotelian target. With
/// Rk the first symbol of arity > 1, R(s,t) becomes Rk(s,t) or
/// Ez Rk(s,t,z,...,z) with z the least of z1, z2, ... not occurring.
Formula apply_T_unord(const Formula& upsilon, const Vocabulary& tau);

/// The fresh variable apply_T_* would introduce for `upsilon`.
std::string fresh_variable(const Formula& upsilon, char stem);

/// Target structure of the zero-padding reduction: decode_bin(tau, <A> 0^N).
Structure pad_ordered(const Structure& a, const Vocabulary& tau);
/// Target structure with Rk = R^A x {0}^(ak-2) and every other relation empty.
Structure pad_unordered(const Structure& a, const Vocabulary& tau);

}  // namespace fmw
