#include "fmw/fragment.hpp"

namespace fmw {

std::string_view to_string(Fragment f) {
  switch (f) {
    case Fragment::FO: return "FO";
    case Fragment::SOExists: return "SO-exists";
    case Fragment::SOForall: return "SO-forall";
    case Fragment::FOTC: return "FO(TC)";
    case Fragment::FOLFP: return "FO(LFP)";
    case Fragment::SOPFP: return "SO(PFP)";
    case Fragment::Other: return "OTHER";
  }
  return "?";
}

namespace {

struct Census {
  bool so = false;
  bool tc = false;
  bool lfp = false;
  bool pfp = false;
};

void census(const Formula& f, Census& c) {
  switch (f.kind()) {
    case NodeKind::SoExists:
    case NodeKind::SoForall: c.so = true; break;
    case NodeKind::Tc: c.tc = true; break;
    case NodeKind::Lfp: c.lfp = true; break;
    case NodeKind::Pfp: c.pfp = true; break;
    default: break;
  }
  for (const auto& k : f.children()) census(k, c);
}

}  // namespace

Fragment fragment_of(const Formula& f) {
  Census all;
  census(f, all);
  if (all.pfp) return Fragment::SOPFP;

  const Formula* m = &f;
  bool any_ex = false;
  bool any_all = false;
  while (m->kind() == NodeKind::SoExists || m->kind() == NodeKind::SoForall) {
    (m->kind() == NodeKind::SoExists ? any_ex : any_all) = true;
    m = &m->child();
  }
  Census matrix;
  census(*m, matrix);
  if (matrix.so) return Fragment::Other;
  if (!any_ex && !any_all) {
    if (matrix.lfp) return Fragment::FOLFP;
    if (matrix.tc) return Fragment::FOTC;
    return Fragment::FO;
  }
  if (matrix.tc || matrix.lfp || (any_ex && any_all)) return Fragment::Other;
  return any_ex ? Fragment::SOExists : Fragment::SOForall;
}

bool in_fragment(const Formula& f, Fragment target) {
  const Fragment tag = fragment_of(f);
  switch (target) {
    case Fragment::FO: return tag == Fragment::FO;
    case Fragment::FOTC: return tag == Fragment::FO || tag == Fragment::FOTC;
    case Fragment::FOLFP: return tag == Fragment::FO || tag == Fragment::FOTC || tag == Fragment::FOLFP;
    case Fragment::SOExists: return tag == Fragment::FO || tag == Fragment::SOExists;
    case Fragment::SOForall: return tag == Fragment::FO || tag == Fragment::SOForall;
    case Fragment::SOPFP:
    case Fragment::Other: return true;
  }
  return false;
}

std::string_view to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::NL: return "NL";
    case ComplexityClass::P: return "P";
    case ComplexityClass::NP: return "NP";
    case ComplexityClass::CoNP: return "coNP";
    case ComplexityClass::PSPACE: return "PSPACE";
  }
  return "?";
}

std::optional<ComplexityClass> parse_complexity_class(std::string_view text) {
  for (auto c : {ComplexityClass::NL, ComplexityClass::P, ComplexityClass::NP, ComplexityClass::CoNP,
                 ComplexityClass::PSPACE}) {
    if (to_string(c) == text) return c;
  }
  if (text == "CONP" || text == "conp") return ComplexityClass::CoNP;
  return std::nullopt;
}

Fragment logic_of(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::NL: return Fragment::FOTC;
    case ComplexityClass::P: return Fragment::FOLFP;
    case ComplexityClass::NP: return Fragment::SOExists;
    case ComplexityClass::CoNP: return Fragment::SOForall;
    case ComplexityClass::PSPACE: return Fragment::SOPFP;
  }
  return Fragment::Other;
}

}  // namespace fmw
