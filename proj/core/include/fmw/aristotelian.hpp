#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fmw/bits.hpp"
#include "fmw/structure.hpp"

namespace fmw {

class Formula;

using BigNat = boost::multiprecision::cpp_int;

/// Condensed encoding of a structure over unary predicates:
///   1 v_1 ~n_1 v_2 ~n_2 ... v_{2^m} ~n_{2^m}
/// where v_j runs over {0,1}^m in lexicographic order and n_j counts the
/// elements whose membership pattern (R_1(i) ... R_m(i)) equals v_j.
class BencString {
 public:
  /// Validates the block layout for an m-predicate vocabulary, including
  /// sum n_j > 1. Throws MalformedBenc.
  static BencString parse(std::string_view bits, int m);

  const BitString& bits() const noexcept { return bits_; }
  int predicates() const noexcept { return m_; }
  /// n_1 .. n_{2^m}.
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t universe() const noexcept;

 private:
  BencString(BitString bits, int m, std::vector<std::uint64_t> counts)
      : bits_(std::move(bits)), m_(m), counts_(std::move(counts)) {}

  BitString bits_;
  int m_ = 0;
  std::vector<std::uint64_t> counts_;

  friend BencString benc(const Structure& a);
};

/// Index j-1 of the pattern v_j matched by element i (R_1 is the most
/// significant bit).
std::size_t pattern_index(const Structure& a, Element i);

BencString benc(const Structure& a);

/// Numeric value of benc(A) read as a binary numeral, which is the length of
/// the unary encoding uenc(A). The unary string itself is never built.
BigNat uenc_length(const Structure& a);

/// Elements listed in the order that sorts by matched pattern index, then by
/// natural order.
std::vector<int> canonical_order(const Structure& a);

/// Relabels A so element k of the result is canonical_order(A)[k].
Structure canonize(const Structure& a);

/// Rebuilds the structure that the reconstruction algorithm assembles from a
/// condensed encoding: patterns v_j are handed to consecutive elements in
/// increasing j.
Structure reconstruct(const Vocabulary& vocab, const BencString& b);
Structure reconstruct(const Vocabulary& vocab, std::string_view bits);

/// Membership of a unary string (given by its length) in the set of unary
/// encodings of models of `sentence`. Malformed lengths are non-members.
bool decide_unary_member(const BigNat& unary_length, const Formula& sentence, const Vocabulary& vocab);

/// 1 + 2^m (m + log n + 2 log log n + 7).
double benc_length_bound(int m, int n);

/// Checks |uenc| < 2^((m+7) 2^m + 1) * (n log^2 n)^(2^m) in extended precision.
bool uenc_length_within_bound(const BigNat& unary_length, int m, int n);

BigNat binary_to_bignat(std::string_view bits);
BitString bignat_to_binary(const BigNat& x);

}  // namespace fmw
