#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "fmw/bits.hpp"

namespace fmw {

/// Self-delimiting code for nonnegative integers. With b the binary numeral of
/// x and c the binary numeral of |b|, the codeword is 1^|c| 0 c b.
BitString encode_nat(std::uint64_t x);

struct DecodedNat {
  std::uint64_t value;
  std::size_t consumed;
};

/// Decodes the codeword at the start of `bits`; trailing bits are ignored.
/// Throws Malformed on truncation or non-canonical codewords.
DecodedNat decode_nat(std::string_view bits);

}  // namespace fmw
