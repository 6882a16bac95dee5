#pragma once

#include <cstdint>
#include <string_view>

#include "fmw/bits.hpp"
#include "fmw/formula.hpp"

namespace fmw {

/// Self-delimiting serialization. Each node is a prefix-code tag followed by
/// its fields; names are a length followed by 6-bit characters over
/// [a-zA-Z0-9_]; payloads are a length followed by raw bits.
BitString godel_encode(const Formula& f);

/// Inverse of godel_encode. The whole input must be consumed. Throws Malformed.
Formula godel_decode(std::string_view bits);

/// Restrictions applied while decoding, so a prefix that can only complete
/// into an unusable formula is rejected as early as possible.
struct DecodeScope {
  /// When set, atoms must use bound variables and symbols of this vocabulary
  /// (or bound relation variables) with matching arities.
  const Vocabulary* vocab = nullptr;
  bool allow_char = true;
};

/// Prefix-code value written in front of a node of this kind.
std::uint64_t node_tag(NodeKind kind);

void write_formula(BitWriter& out, const Formula& f);
/// Throws IncompleteInput when the reader runs dry and Malformed otherwise.
Formula read_formula(BitReader& in, const DecodeScope& scope = {});

/// Writes/reads the 6-bit name code shared with other codecs.
void write_name(BitWriter& out, std::string_view name);
std::string read_name(BitReader& in);

}  // namespace fmw
