#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fmw/bits.hpp"
#include "fmw/vocabulary.hpp"

namespace fmw {

using Element = int;
using Tuple = std::vector<Element>;

/// n^arity with overflow detection (throws InvalidArgument).
std::size_t checked_pow(std::size_t n, int arity);

/// Characteristic vector of a relation over {0..n-1}; tuple (t1..ta) lives at
/// index sum t_j * n^(a-j), i.e. lexicographic order.
class Relation {
 public:
  Relation() = default;
  Relation(int arity, int n);

  int arity() const noexcept { return arity_; }
  int universe() const noexcept { return n_; }
  std::size_t slots() const noexcept { return bits_.size(); }

  std::size_t index(std::span<const Element> tuple) const;
  Tuple tuple_at(std::size_t index) const;

  bool contains(std::span<const Element> tuple) const { return bits_[index(tuple)] != 0; }
  bool test(std::size_t index) const { return bits_[index] != 0; }
  void set(std::span<const Element> tuple, bool value = true) { bits_[index(tuple)] = value ? 1 : 0; }
  void set_index(std::size_t index, bool value = true) { bits_[index] = value ? 1 : 0; }

  std::size_t count() const noexcept;
  std::vector<Tuple> tuples() const;

  /// Advances to the next relation in binary-counter order (first slot is the
  /// most significant). Returns false after wrapping back to the empty relation.
  bool increment() noexcept;

  const std::vector<std::uint8_t>& raw() const noexcept { return bits_; }

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation& a, const Relation& b) { return a.bits_ <=> b.bits_; }

 private:
  int arity_ = 0;
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

class Structure {
 public:
  /// All relations empty.
  Structure(Vocabulary vocab, int n);

  const Vocabulary& vocab() const noexcept { return vocab_; }
  int size() const noexcept { return n_; }

  const Relation& relation(std::size_t symbol) const { return relations_.at(symbol); }
  const Relation& relation(std::string_view name) const;
  Relation& relation_mut(std::size_t symbol) { return relations_.at(symbol); }

  void add(std::string_view name, std::span<const Element> tuple);
  void add(std::string_view name, std::initializer_list<Element> tuple) {
    add(name, std::span<const Element>(tuple.begin(), tuple.size()));
  }

  /// Relabels element i as perm[i].
  Structure permuted(std::span<const int> perm) const;

  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  Vocabulary vocab_;
  int n_;
  std::vector<Relation> relations_;
};

/// ell(x, k): iterated binary length, ell(x) = floor(log2 x) + 1. Rejects x = 0.
std::uint64_t ell(std::uint64_t x, unsigned k = 1);

/// Length of the binary encoding of any structure with n elements.
std::size_t encoding_length(const Vocabulary& vocab, int n);

BitString encode_bin(const Structure& a);
Structure decode_bin(const Vocabulary& vocab, std::string_view bits);

/// Smallest n >= 2 with encoding_length(vocab, n) == length, if any.
std::optional<int> universe_for_length(const Vocabulary& vocab, std::size_t length);

/// Visits every structure with 2 <= n <= n_max in increasing n, then
/// lexicographic order of the encoding. The visitor returns false to stop.
/// Returns false iff the visitor stopped the enumeration.
bool for_each_structure(const Vocabulary& vocab, int n_max,
                        const std::function<bool(const Structure&)>& visit);

/// Same order as for_each_structure, materialized.
std::vector<Structure> enumerate_structures(const Vocabulary& vocab, int n_max);

/// Number of structures for_each_structure visits at exactly size n.
std::uint64_t count_structures(const Vocabulary& vocab, int n);

/// Brute force over all bijections. Ordered structures are isomorphic only
/// when they are equal.
bool is_isomorphic(const Structure& a, const Structure& b);

/// Textual structure format:
///   vocab E:2 <
///   n = 3
///   E = (0,1) (1,2)
Structure parse_structure(std::string_view text);
std::string print_structure(const Structure& a);

}  // namespace fmw
