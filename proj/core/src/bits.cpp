#include "fmw/bits.hpp"

#include <algorithm>
#include <charconv>

#include "fmw/prefix_code.hpp"

namespace fmw {

bool is_bitstring(std::string_view s) noexcept {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

BitString to_binary(std::uint64_t x) {
  if (x == 0) return "0";
  BitString out;
  while (x != 0) {
    out.push_back(static_cast<char>('0' + (x & 1U)));
    x >>= 1U;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t from_binary(std::string_view bits) {
  if (bits.empty() || !is_bitstring(bits)) fail(ErrorCode::Malformed, "not a binary numeral");
  std::uint64_t value = 0;
  for (char c : bits) {
    if (value >> 63U) fail(ErrorCode::Malformed, "binary numeral overflows 64 bits");
    value = (value << 1U) | static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

std::string bits_to_hex(std::string_view bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(bits.size()) + ":";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1U;
      if (i + j < bits.size() && bits[i + j] == '1') nibble |= 1U;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

BitString hex_to_bits(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(ErrorCode::Malformed, "hex payload lacks a length prefix");
  std::size_t length = 0;
  const auto* first = text.data();
  const auto [ptr, ec] = std::from_chars(first, first + colon, length);
  if (ec != std::errc{} || ptr != first + colon) fail(ErrorCode::Malformed, "bad hex payload length");
  const auto digits = text.substr(colon + 1);
  if (digits.size() != (length + 3) / 4) fail(ErrorCode::Malformed, "hex payload length mismatch");
  BitString out;
  out.reserve(digits.size() * 4);
  for (char c : digits) {
    unsigned v = 0;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      fail(ErrorCode::Malformed, "bad hex digit");
    }
    for (int j = 3; j >= 0; --j) out.push_back(((v >> static_cast<unsigned>(j)) & 1U) ? '1' : '0');
  }
  for (std::size_t i = length; i < out.size(); ++i) {
    if (out[i] != '0') fail(ErrorCode::Malformed, "nonzero hex padding");
  }
  out.resize(length);
  return out;
}

std::uint64_t BitReader::read_nat() {
  std::size_t ones = 0;
  while (read_bit() == '1') {
    if (++ones > 7) fail(ErrorCode::Malformed, "natural number codeword too long");
  }
  if (ones == 0) fail(ErrorCode::Malformed, "codeword length field is empty");
  const auto len_bits = read(ones);
  if (len_bits[0] != '1') fail(ErrorCode::Malformed, "non-canonical codeword length");
  const auto len = from_binary(len_bits);
  if (len > 64) fail(ErrorCode::Malformed, "natural number exceeds 64 bits");
  const auto body = read(len);
  if (len > 1 && body[0] != '1') fail(ErrorCode::Malformed, "non-canonical codeword body");
  return from_binary(body);
}

std::uint64_t BitReader::read_fixed(unsigned width) {
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i) value = (value << 1U) | static_cast<std::uint64_t>(read_bit() - '0');
  return value;
}

void BitWriter::write_nat(std::uint64_t x) { out_.append(encode_nat(x)); }

void BitWriter::write_fixed(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) out_.push_back(((value >> i) & 1U) ? '1' : '0');
}

}  // namespace fmw
