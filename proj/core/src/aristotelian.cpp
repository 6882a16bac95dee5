#include "fmw/aristotelian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fmw/error.hpp"
#include "fmw/eval.hpp"
#include "fmw/prefix_code.hpp"

namespace fmw {

namespace {

void require_aristotelian(const Vocabulary& vocab) {
  if (!vocab.is_aristotelian()) fail(ErrorCode::NotAristotelian, "vocabulary " + vocab.to_string() + " is not monadic");
}

BitString pattern_bits(std::size_t j, int m) {
  BitString v(static_cast<std::size_t>(m), '0');
  for (int r = 0; r < m; ++r) {
    if ((j >> static_cast<unsigned>(m - 1 - r)) & 1U) v[static_cast<std::size_t>(r)] = '1';
  }
  return v;
}

}  // namespace

BencString BencString::parse(std::string_view bits, int m) {
  if (m < 1 || m > 16) fail(ErrorCode::MalformedBenc, "unsupported predicate count");
  if (bits.empty() || bits[0] != '1' || !is_bitstring(bits)) fail(ErrorCode::MalformedBenc, "must start with 1");
  const std::size_t blocks = std::size_t{1} << static_cast<unsigned>(m);
  std::vector<std::uint64_t> counts;
  counts.reserve(blocks);
  BitReader reader(bits.substr(1));
  try {
    for (std::size_t j = 0; j < blocks; ++j) {
      if (reader.read(static_cast<std::size_t>(m)) != pattern_bits(j, m))
        fail(ErrorCode::MalformedBenc, "pattern block " + std::to_string(j + 1) + " out of order");
      counts.push_back(reader.read_nat());
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedBenc) throw;
    fail(ErrorCode::MalformedBenc, e.what());
  }
  if (!reader.at_end()) fail(ErrorCode::MalformedBenc, "trailing bits after the last block");
  std::uint64_t total = 0;
  for (auto c : counts) {
    if (c > (std::uint64_t{1} << 32U) || total > (std::uint64_t{1} << 32U))
      fail(ErrorCode::MalformedBenc, "universe too large");
    total += c;
  }
  if (total <= 1) fail(ErrorCode::MalformedBenc, "pattern counts must sum to more than 1");
  return BencString(BitString(bits), m, std::move(counts));
}

std::uint64_t BencString::universe() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}); }

std::size_t pattern_index(const Structure& a, Element i) {
  std::size_t j = 0;
  const Element tuple[1] = {i};
  for (std::size_t r = 0; r < a.vocab().size(); ++r) j = (j << 1U) | (a.relation(r).contains(tuple) ? 1U : 0U);
  return j;
}

BencString benc(const Structure& a) {
  require_aristotelian(a.vocab());
  const int m = static_cast<int>(a.vocab().size());
  const std::size_t blocks = std::size_t{1} << static_cast<unsigned>(m);
  std::vector<std::uint64_t> counts(blocks, 0);
  for (Element i = 0; i < a.size(); ++i) ++counts[pattern_index(a, i)];
  BitString bits = "1";
  for (std::size_t j = 0; j < blocks; ++j) {
    bits += pattern_bits(j, m);
    bits += encode_nat(counts[j]);
  }
  return BencString(std::move(bits), m, std::move(counts));
}

BigNat binary_to_bignat(std::string_view bits) {
  BigNat out = 0;
  for (char c : bits) {
    out <<= 1;
    if (c == '1') out |= 1;
  }
  return out;
}

BitString bignat_to_binary(const BigNat& x) {
  if (x == 0) return "0";
  BitString out;
  const auto top = boost::multiprecision::msb(x);
  out.reserve(top + 1);
  for (std::size_t i = top + 1; i-- > 0;) out.push_back(boost::multiprecision::bit_test(x, static_cast<unsigned>(i)) ? '1' : '0');
  return out;
}

BigNat uenc_length(const Structure& a) { return binary_to_bignat(benc(a).bits()); }

std::vector<int> canonical_order(const Structure& a) {
  require_aristotelian(a.vocab());
  std::vector<int> order(static_cast<std::size_t>(a.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return pattern_index(a, x) < pattern_index(a, y); });
  return order;
}

Structure canonize(const Structure& a) {
  const auto order = canonical_order(a);
  // order[k] is the element placed at position k; permuted() wants old -> new.
  std::vector<int> to_position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) to_position[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  return a.permuted(to_position);
}

Structure reconstruct(const Vocabulary& vocab, const BencString& b) {
  require_aristotelian(vocab);
  const int m = static_cast<int>(vocab.size());
  if (b.predicates() != m) fail(ErrorCode::MalformedBenc, "encoding predicate count differs from vocabulary");
  const auto n = b.universe();
  if (n > 4096) fail(ErrorCode::MalformedBenc, "universe too large to materialize");

  // w_r := 0^n, then for each j with n_j > 0 give the next n_j elements the
  // pattern v_j.
  std::vector<BitString> w(static_cast<std::size_t>(m), BitString(n, '0'));
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.counts().size(); ++j) {
    const BitString v = pattern_bits(j, m);
    for (std::uint64_t k = 0; k < b.counts()[j]; ++k, ++i) {
      for (int r = 0; r < m; ++r) {
        if (v[static_cast<std::size_t>(r)] == '1') w[static_cast<std::size_t>(r)][i] = '1';
      }
    }
  }
  BitString encoding;
  for (const auto& row : w) encoding += row;
  return decode_bin(vocab, encoding);
}

Structure reconstruct(const Vocabulary& vocab, std::string_view bits) {
  require_aristotelian(vocab);
  return reconstruct(vocab, BencString::parse(bits, static_cast<int>(vocab.size())));
}

bool decide_unary_member(const BigNat& unary_length, const Formula& sentence, const Vocabulary& vocab) {
  require_aristotelian(vocab);
  const BitString w = bignat_to_binary(unary_length);
  std::optional<Structure> a;
  try {
    a = reconstruct(vocab, BencString::parse(w, static_cast<int>(vocab.size())));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedBenc) return false;
    throw;
  }
  return models(*a, sentence);
}

double benc_length_bound(int m, int n) {
  const double logn = std::log2(static_cast<double>(n));
  return 1.0 + std::ldexp(1.0, m) * (m + logn + 2.0 * std::log2(logn) + 7.0);
}

bool uenc_length_within_bound(const BigNat& unary_length, int m, int n) {
  using Float = boost::multiprecision::cpp_bin_float_100;
  const Float logn = log(Float(n)) / log(Float(2));
  const Float base = Float(n) * logn * logn;
  const unsigned blocks = 1U << static_cast<unsigned>(m);
  Float bound = ldexp(Float(1), static_cast<int>((m + 7) * blocks + 1));
  bound *= pow(base, blocks);
  return Float(unary_length) < bound;
}

}  // namespace fmw
