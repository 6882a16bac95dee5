#include "fmw/charsets.hpp"

#include <limits>

#include "fmw/error.hpp"
#include "fmw/godel.hpp"

namespace fmw {

namespace {

int clamp_size(std::uint64_t bound) {
  return bound > static_cast<std::uint64_t>(std::numeric_limits<int>::max()) ? std::numeric_limits<int>::max()
                                                                             : static_cast<int>(bound);
}

void require_char_free(const Formula& f, const char* what) {
  if (f.empty()) fail(ErrorCode::InvalidArgument, std::string(what) + " is empty");
  if (f.contains_char()) fail(ErrorCode::PayloadNotCharFree, std::string(what) + " contains a CHAR leaf");
}

std::uint64_t bound_of(const Structure& a, std::uint64_t (*bound)(std::size_t)) {
  return bound(encoding_length(a.vocab(), a.size()));
}

Formula decode_payload_sentence(std::string_view bits, const char* what) {
  Formula f = godel_decode(bits);
  if (f.contains_char()) fail(ErrorCode::PayloadNotCharFree, std::string(what) + " payload contains a CHAR leaf");
  if (!is_sentence(f)) fail(ErrorCode::Malformed, std::string(what) + " payload is not a sentence");
  return f;
}

}  // namespace

std::uint64_t ordered_bound(std::size_t encoding_bits) { return ell(encoding_bits, 3); }
std::uint64_t unordered_bound(std::size_t encoding_bits) { return ell(encoding_bits, 2); }

bool reduction_holds_upto(const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau,
                          const Vocabulary& vocab, std::uint64_t bound, const EvalOptions& options) {
  require_char_free(gamma, "Gamma");
  require_char_free(upsilon_tau, "Upsilon");
  if (bound < 2) return true;
  const auto oracle = sentence_oracle(gamma, vocab);
  const ModelChecker target(upsilon_tau, vocab, options);
  return !find_first_structure(vocab, clamp_size(bound), [&](const Structure& b) {
    return simulate(t, encode_bin(b), oracle).accepted != target(b);
  });
}

bool complements_upto(const Formula& lambda, const Formula& gamma, const Vocabulary& vocab, std::uint64_t bound,
                      const EvalOptions& options) {
  require_char_free(lambda, "Lambda");
  require_char_free(gamma, "Gamma");
  if (bound < 2) return true;
  const ModelChecker l(lambda, vocab, options);
  const ModelChecker g(gamma, vocab, options);
  return !find_first_structure(vocab, clamp_size(bound), [&](const Structure& b) { return l(b) == g(b); });
}

bool generates_all_upto(const Grammar& g, std::uint64_t bound) {
  return !find_missing(g, clamp_size(bound)).has_value();
}

bool member_S_ord(const Structure& a, const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau,
                  const EvalOptions& options) {
  if (!a.vocab().has_order()) fail(ErrorCode::NoOrderInTarget, "S< needs an ordered vocabulary");
  return reduction_holds_upto(gamma, t, upsilon_tau, a.vocab(), bound_of(a, ordered_bound), options);
}

bool member_S_unord(const Structure& a, const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau,
                    const EvalOptions& options) {
  if (a.vocab().has_order()) fail(ErrorCode::OrderInTarget, "S needs an unordered vocabulary");
  return reduction_holds_upto(gamma, t, upsilon_tau, a.vocab(), bound_of(a, unordered_bound), options);
}

bool member_S_npconp(const Structure& a, const Formula& lambda, const Formula& gamma, const EvalOptions& options) {
  return complements_upto(lambda, gamma, a.vocab(), bound_of(a, unordered_bound), options);
}

bool member_S_cfg(const Structure& a, const Grammar& g) { return generates_all_upto(g, bound_of(a, ordered_bound)); }

Formula char_sentence(CharKind kind, std::vector<BitString> payloads) {
  return Formula::char_leaf(kind, std::move(payloads));
}

namespace {

Formula machine_leaf(CharKind kind, const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau) {
  require_char_free(gamma, "Gamma");
  require_char_free(upsilon_tau, "Upsilon");
  return char_sentence(kind, {godel_encode(gamma), encode_tm(t), godel_encode(upsilon_tau)});
}

}  // namespace

Formula char_ord(const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau) {
  return machine_leaf(CharKind::Ord, gamma, t, upsilon_tau);
}

Formula char_unord(const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau) {
  return machine_leaf(CharKind::Unord, gamma, t, upsilon_tau);
}

Formula cochar_unord(const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau) {
  return machine_leaf(CharKind::CoUnord, gamma, t, upsilon_tau);
}

Formula char_npconp(const Formula& lambda, const Formula& gamma) {
  require_char_free(lambda, "Lambda");
  require_char_free(gamma, "Gamma");
  return char_sentence(CharKind::NpConp, {godel_encode(lambda), godel_encode(gamma)});
}

Formula char_cfg(const Grammar& g) { return char_sentence(CharKind::Cfg, {encode_grammar(g)}); }

std::optional<bool> CharCache::lookup(const std::string& key) const {
  std::lock_guard lock(mu_);
  if (auto it = verdicts_.find(key); it != verdicts_.end()) return it->second;
  return std::nullopt;
}

void CharCache::store(const std::string& key, bool verdict) {
  std::lock_guard lock(mu_);
  verdicts_.emplace(key, verdict);
}

std::size_t CharCache::size() const {
  std::lock_guard lock(mu_);
  return verdicts_.size();
}

namespace detail {

void validate_char_payloads(CharKind kind, const std::vector<BitString>& payloads) {
  switch (kind) {
    case CharKind::Ord:
    case CharKind::Unord:
    case CharKind::CoUnord:
      decode_payload_sentence(payloads.at(0), "Gamma");
      decode_tm(payloads.at(1));
      decode_payload_sentence(payloads.at(2), "Upsilon");
      return;
    case CharKind::NpConp:
      decode_payload_sentence(payloads.at(0), "Lambda");
      decode_payload_sentence(payloads.at(1), "Gamma");
      return;
    case CharKind::Cfg: decode_grammar(payloads.at(0)); return;
  }
}

bool char_leaf_holds(const Structure& a, const Node& leaf, int budget, CharCache* cache) {
  const bool ordered_bound_kind = leaf.char_kind == CharKind::Ord || leaf.char_kind == CharKind::Cfg;
  const auto bound = bound_of(a, ordered_bound_kind ? ordered_bound : unordered_bound);
  std::string key;
  if (cache) {
    key = std::string(char_keyword(leaf.char_kind));
    for (const auto& p : leaf.payloads) key += "|" + p;
    key += "|" + a.vocab().to_string() + "|" + std::to_string(bound);
    if (auto hit = cache->lookup(key)) return leaf.char_kind == CharKind::CoUnord ? !*hit : *hit;
  }
  EvalOptions inner;
  inner.char_budget = budget;
  const auto& p = leaf.payloads;
  bool verdict = false;
  switch (leaf.char_kind) {
    case CharKind::Ord:
      verdict = member_S_ord(a, godel_decode(p[0]), decode_tm(p[1]), godel_decode(p[2]), inner);
      break;
    case CharKind::Unord:
    case CharKind::CoUnord:
      verdict = member_S_unord(a, godel_decode(p[0]), decode_tm(p[1]), godel_decode(p[2]), inner);
      break;
    case CharKind::NpConp: verdict = member_S_npconp(a, godel_decode(p[0]), godel_decode(p[1]), inner); break;
    case CharKind::Cfg: verdict = member_S_cfg(a, decode_grammar(p[0])); break;
  }
  // Cached verdicts are the uncomplemented set membership.
  if (cache) cache->store(key, verdict);
  return leaf.char_kind == CharKind::CoUnord ? !verdict : verdict;
}

}  // namespace detail

}  // namespace fmw
