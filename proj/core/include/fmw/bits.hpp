#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "fmw/error.hpp"

namespace fmw {

/// Bit strings are ASCII '0'/'1' sequences; they are what the CLI prints and
/// what the encoders exchange.
using BitString = std::string;

bool is_bitstring(std::string_view s) noexcept;

/// Binary numeral without leading zeros ("0" for zero).
BitString to_binary(std::uint64_t x);

/// Parses a binary numeral; throws Malformed on non-bits or overflow.
std::uint64_t from_binary(std::string_view bits);

/// Hex rendering used for CHAR payloads: `<bit-length>:<hex digits>`, bits
/// left-aligned and zero padded to a multiple of four.
std::string bits_to_hex(std::string_view bits);
BitString hex_to_bits(std::string_view text);

/// Sequential reader over a bit string. Reading past the end throws
/// IncompleteInput so prefix-driven enumeration can tell "needs more bits"
/// apart from "can never decode".
class BitReader {
 public:
  explicit BitReader(std::string_view bits) : bits_(bits) {}

  bool at_end() const noexcept { return pos_ == bits_.size(); }
  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bits_.size() - pos_; }

  char read_bit() {
    if (pos_ >= bits_.size()) fail(ErrorCode::IncompleteInput, "bit stream ended");
    return bits_[pos_++];
  }

  std::string_view read(std::size_t count) {
    if (remaining() < count) {
      pos_ = bits_.size();
      fail(ErrorCode::IncompleteInput, "bit stream ended");
    }
    auto out = bits_.substr(pos_, count);
    pos_ += count;
    return out;
  }

  /// Decodes one prefix-free natural number codeword.
  std::uint64_t read_nat();

  /// Fixed-width unsigned field, most significant bit first.
  std::uint64_t read_fixed(unsigned width);

 private:
  std::string_view bits_;
  std::size_t pos_ = 0;
};

class BitWriter {
 public:
  void write_nat(std::uint64_t x);
  void write_fixed(std::uint64_t value, unsigned width);
  void write_bits(std::string_view bits) { out_.append(bits); }

  const BitString& str() const& noexcept { return out_; }
  BitString str() && noexcept { return std::move(out_); }

 private:
  BitString out_;
};

}  // namespace fmw
