#pragma once

#include <optional>
#include <string_view>

#include "fmw/bits.hpp"
#include "fmw/formula.hpp"

namespace fmw {

/// Q1 x1 ... Qk xk (x1 != x1 & ... & xk != xk), Qi existential iff w[i] = 1.
/// The conjunction nests to the left. Throws EmptyString.
Formula psi_encode(std::string_view w);

/// The string w when f is exactly psi_encode(w).
std::optional<BitString> psi_recognize(const Formula& f);

}  // namespace fmw
