#include "fmw/prefix_code.hpp"

namespace fmw {

BitString encode_nat(std::uint64_t x) {
  const BitString body = to_binary(x);
  const BitString len = to_binary(body.size());
  BitString out(len.size(), '1');
  out.push_back('0');
  out += len;
  out += body;
  return out;
}

DecodedNat decode_nat(std::string_view bits) {
  BitReader reader(bits);
  try {
    const auto value = reader.read_nat();
    return {value, reader.position()};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IncompleteInput) fail(ErrorCode::Malformed, "stream ends mid-codeword");
    throw;
  }
}

}  // namespace fmw
