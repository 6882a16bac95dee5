#pragma once

#include <optional>
#include <string_view>

#include "fmw/formula.hpp"

namespace fmw {

enum class Fragment { FO, SOExists, SOForall, FOTC, FOLFP, SOPFP, Other };

std::string_view to_string(Fragment f);

/// Most specific tag. CHAR leaves count as atoms. A formula containing PFP is
/// SO(PFP); SO quantifiers must form a prenex block of one polarity over a
/// fixpoint-free matrix to be SO-exists / SO-forall.
Fragment fragment_of(const Formula& f);

/// Whether f belongs to the logic `target`, e.g. FO sentences belong to every
/// logic and everything belongs to SO(PFP).
bool in_fragment(const Formula& f, Fragment target);

enum class ComplexityClass { NL, P, NP, CoNP, PSPACE };

std::string_view to_string(ComplexityClass c);
std::optional<ComplexityClass> parse_complexity_class(std::string_view text);

/// NL -> FO(TC), P -> FO(LFP), NP -> SO-exists, coNP -> SO-forall,
/// PSPACE -> SO(PFP).
Fragment logic_of(ComplexityClass c);

}  // namespace fmw
