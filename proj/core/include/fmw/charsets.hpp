#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fmw/cfg.hpp"
#include "fmw/eval.hpp"
#include "fmw/formula.hpp"
#include "fmw/machine.hpp"
#include "fmw/structure.hpp"

namespace fmw {

/// Largest universe size B ranges over for a structure with `encoding_bits`
/// encoded bits: ell^(3) for the ordered and grammar sets, ell^(2) for the
/// unordered and NP-coNP sets.
std::uint64_t ordered_bound(std::size_t encoding_bits);
std::uint64_t unordered_bound(std::size_t encoding_bits);

/// Condition (1)/(3) for every B over `vocab` with 2 <= |B| <= bound: T
/// accepts <B> with oracle MOD[gamma] iff B |= upsilon_tau.
bool reduction_holds_upto(const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau,
                          const Vocabulary& vocab, std::uint64_t bound, const EvalOptions& options = {});
/// Condition (7): B |= lambda iff B does not satisfy gamma.
bool complements_upto(const Formula& lambda, const Formula& gamma, const Vocabulary& vocab, std::uint64_t bound,
                      const EvalOptions& options = {});
/// Every word of length <= bound is generated.
bool generates_all_upto(const Grammar& g, std::uint64_t bound);

/// Requires an ordered vocabulary (NoOrderInTarget).
bool member_S_ord(const Structure& a, const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau,
                  const EvalOptions& options = {});
/// Requires an unordered vocabulary (OrderInTarget).
bool member_S_unord(const Structure& a, const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau,
                    const EvalOptions& options = {});
bool member_S_npconp(const Structure& a, const Formula& lambda, const Formula& gamma,
                     const EvalOptions& options = {});
bool member_S_cfg(const Structure& a, const Grammar& g);

/// Reserved leaves. Throw PayloadNotCharFree when a payload sentence contains
/// a CHAR leaf.
Formula char_ord(const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau);
Formula char_unord(const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau);
Formula cochar_unord(const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau);
Formula char_npconp(const Formula& lambda, const Formula& gamma);
Formula char_cfg(const Grammar& g);
/// Generic form over already serialized payloads.
Formula char_sentence(CharKind kind, std::vector<BitString> payloads);

/// Thread-safe memo of CHAR leaf verdicts. A leaf's verdict depends on the
/// structure only through the vocabulary and the size bound, which is the key.
class CharCache {
 public:
  std::optional<bool> lookup(const std::string& key) const;
  void store(const std::string& key, bool verdict);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, bool> verdicts_;
};

namespace detail {
/// Decodes each payload and checks it is CHAR-free; used by Formula::char_leaf.
void validate_char_payloads(CharKind kind, const std::vector<BitString>& payloads);
/// Semantics of a CHAR leaf on `a`; `budget` is what is left for the leaf.
bool char_leaf_holds(const Structure& a, const Node& leaf, int budget, CharCache* cache);
}  // namespace detail

}  // namespace fmw
