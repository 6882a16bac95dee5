#include "fmw/operators.hpp"

#include "fmw/error.hpp"

namespace fmw {

Vocabulary ordered_source_vocab() { return Vocabulary({{"R", 1}}, true); }
Vocabulary unordered_source_vocab() { return Vocabulary({{"R", 2}}, false); }

std::string fresh_variable(const Formula& upsilon, char stem) {
  const auto used = all_variables(upsilon);
  for (int i = 1;; ++i) {
    std::string candidate = std::string(1, stem) + std::to_string(i);
    if (!used.contains(candidate)) return candidate;
  }
}

namespace {

struct Substitution {
  std::string target;             // symbol replacing R
  int target_arity = 1;
  int copies = 0;                 // padding variables
  bool pad_front = true;          // ordered case pads before t, unordered after
  std::string fresh;              // padding variable
  std::string renamed;            // replacement for bound relation variables named `target`

  Formula replace_atom(const std::vector<std::string>& args) const {
    if (copies == 0) return Formula::atom(target, args);
    std::vector<std::string> full;
    if (pad_front) full.assign(static_cast<std::size_t>(copies), fresh);
    full.insert(full.end(), args.begin(), args.end());
    if (!pad_front) full.insert(full.end(), static_cast<std::size_t>(copies), fresh);
    return Formula::exists(fresh, Formula::atom(target, full));
  }

  // `shadow` counts enclosing binders of R; `rename` counts binders of the
  // target name that were renamed.
  Formula apply(const Formula& f, int shadow, int rename) const {
    switch (f.kind()) {
      case NodeKind::Atom:
        if (f.name() == "R" && shadow == 0) return replace_atom(f.vars());
        if (f.name() == target && rename > 0) return Formula::atom(renamed, f.vars());
        return f;
      case NodeKind::Eq:
      case NodeKind::Neq:
      case NodeKind::Less:
      case NodeKind::Bit:
      case NodeKind::Char: return f;
      case NodeKind::Not: return Formula::negation(apply(f.child(), shadow, rename));
      case NodeKind::And: return Formula::conjunction(apply(f.child(0), shadow, rename), apply(f.child(1), shadow, rename));
      case NodeKind::Or: return Formula::disjunction(apply(f.child(0), shadow, rename), apply(f.child(1), shadow, rename));
      case NodeKind::Implies:
        return Formula::implication(apply(f.child(0), shadow, rename), apply(f.child(1), shadow, rename));
      case NodeKind::Exists: return Formula::exists(f.name(), apply(f.child(), shadow, rename));
      case NodeKind::Forall: return Formula::forall(f.name(), apply(f.child(), shadow, rename));
      case NodeKind::Tc: return Formula::tc(f.vars(), apply(f.child(), shadow, rename), f.args());
      default: break;
    }
    // Relation binders. A binder of R shadows the substitution; a binder of
    // the target name would capture substituted atoms and is renamed.
    std::string name = f.name();
    int s = shadow;
    int r = rename;
    if (name == "R") {
      ++s;
    } else if (name == target) {
      name = renamed;
      ++r;
    }
    Formula body = apply(f.child(), s, r);
    switch (f.kind()) {
      case NodeKind::SoExists: return Formula::so_exists(name, f.arity(), body);
      case NodeKind::SoForall: return Formula::so_forall(name, f.arity(), body);
      case NodeKind::Lfp: return Formula::lfp(name, f.vars(), body, f.args());
      default: return Formula::pfp(name, f.vars(), body, f.args());
    }
  }
};

std::string fresh_relation(const Formula& f, const Vocabulary& tau) {
  auto used = bound_relations(f);
  for (const auto& r : free_relations(f)) used.insert(r);
  for (const auto& s : tau.symbols()) used.insert(s.name);
  for (int i = 1;; ++i) {
    std::string candidate = "Q" + std::to_string(i);
    if (!used.contains(candidate)) return candidate;
  }
}

void check_source(const Formula& upsilon, const Vocabulary& source) {
  if (upsilon.empty()) fail(ErrorCode::WrongSourceVocabulary, "empty sentence");
  if (upsilon.contains_char()) fail(ErrorCode::PayloadNotCharFree, "distinguished sentence contains a CHAR leaf");
  try {
    check_sentence(upsilon, source);
  } catch (const Error& e) {
    fail(ErrorCode::WrongSourceVocabulary, std::string("not a sentence over ") + source.to_string() + ": " + e.what());
  }
}

}  // namespace

Formula apply_T_ord(const Formula& upsilon, const Vocabulary& tau) {
  check_source(upsilon, ordered_source_vocab());
  if (!tau.has_order()) fail(ErrorCode::NoOrderInTarget, "target vocabulary " + tau.to_string() + " lacks <");
  Substitution sub;
  sub.target = tau[0].name;
  sub.target_arity = tau[0].arity;
  sub.copies = tau[0].arity - 1;
  sub.pad_front = true;
  if (sub.copies > 0) sub.fresh = fresh_variable(upsilon, 'y');
  sub.renamed = fresh_relation(upsilon, tau);
  return sub.apply(upsilon, 0, 0);
}

Formula apply_T_unord(const Formula& upsilon, const Vocabulary& tau) {
  check_source(upsilon, unordered_source_vocab());
  if (tau.has_order()) fail(ErrorCode::OrderInTarget, "target vocabulary " + tau.to_string() + " is ordered");
  std::size_t k = 0;
  while (k < tau.size() && tau[k].arity < 2) ++k;
  if (k == tau.size()) fail(ErrorCode::AristotelianTarget, "target vocabulary " + tau.to_string() + " is Aristotelian");
  Substitution sub;
  sub.target = tau[k].name;
  sub.target_arity = tau[k].arity;
  sub.copies = tau[k].arity - 2;
  sub.pad_front = false;
  if (sub.copies > 0) sub.fresh = fresh_variable(upsilon, 'z');
  sub.renamed = fresh_relation(upsilon, tau);
  return sub.apply(upsilon, 0, 0);
}

Structure pad_ordered(const Structure& a, const Vocabulary& tau) {
  if (a.vocab() != ordered_source_vocab()) fail(ErrorCode::WrongSourceVocabulary, "source structure is not over {R:1, <}");
  if (!tau.has_order()) fail(ErrorCode::NoOrderInTarget, "target vocabulary lacks <");
  const int n = a.size();
  BitString bits = encode_bin(a);
  bits.append(encoding_length(tau, n) - static_cast<std::size_t>(n), '0');
  return decode_bin(tau, bits);
}

Structure pad_unordered(const Structure& a, const Vocabulary& tau) {
  if (a.vocab() != unordered_source_vocab()) fail(ErrorCode::WrongSourceVocabulary, "source structure is not over {R:2}");
  if (tau.has_order()) fail(ErrorCode::OrderInTarget, "target vocabulary is ordered");
  std::size_t k = 0;
  while (k < tau.size() && tau[k].arity < 2) ++k;
  if (k == tau.size()) fail(ErrorCode::AristotelianTarget, "target vocabulary is Aristotelian");
  Structure b(tau, a.size());
  for (const auto& t : a.relation(0).tuples()) {
    Tuple full = t;
    full.resize(static_cast<std::size_t>(tau[k].arity), 0);
    b.relation_mut(k).set(full);
  }
  return b;
}

}  // namespace fmw
