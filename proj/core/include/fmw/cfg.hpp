#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmw/bits.hpp"

namespace fmw {

/// A right-hand-side symbol: a terminal character or a nonterminal index.
struct GSymbol {
  bool terminal = true;
  char ch = 0;
  int nt = -1;

  friend bool operator==(const GSymbol&, const GSymbol&) = default;
  friend auto operator<=>(const GSymbol&, const GSymbol&) = default;
};

struct Production {
  int lhs = 0;
  std::vector<GSymbol> rhs;  // empty for epsilon

  friend bool operator==(const Production&, const Production&) = default;
  friend auto operator<=>(const Production&, const Production&) = default;
};

class Grammar {
 public:
  /// Throws InvalidGrammar unless the alphabet has >= 2 distinct printable
  /// characters, nonterminal names are distinct identifiers, every production
  /// refers to declared symbols, and start is a nonterminal.
  Grammar(std::string alphabet, std::vector<std::string> nonterminals, std::vector<Production> productions,
          int start);

  /// Sorted, distinct.
  const std::string& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& nonterminals() const noexcept { return nonterminals_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  int start() const noexcept { return start_; }

  /// Chomsky normal form: A -> BC, A -> a, plus S0 -> eps when the language
  /// contains the empty string; S0 never occurs on a right-hand side.
  bool is_cnf() const;

  friend bool operator==(const Grammar&, const Grammar&) = default;

 private:
  std::string alphabet_;
  std::vector<std::string> nonterminals_;
  std::vector<Production> productions_;
  int start_ = 0;
};

/// Text format:
///   alphabet a b        (optional; defaults to the terminals used)
///   start S             (optional; defaults to the first left-hand side)
///   S -> a S b | eps
/// Tokens starting with an uppercase letter are nonterminals, every other
/// single-character token is a terminal.
Grammar parse_grammar(std::string_view text);
std::string print_grammar(const Grammar& g);

/// Language-equivalent CNF grammar with useless symbols removed.
Grammar to_cnf(const Grammar& g);

/// CYK over a grammar converted once.
class CykRecognizer {
 public:
  explicit CykRecognizer(const Grammar& g);
  ~CykRecognizer();
  CykRecognizer(CykRecognizer&&) noexcept;
  CykRecognizer& operator=(CykRecognizer&&) noexcept;

  /// Throws AlphabetMismatch for characters outside the alphabet.
  bool operator()(std::string_view w) const;
  const std::string& alphabet() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool cyk_member(const Grammar& g, std::string_view w);

/// Least string in length-lexicographic order (alphabet order) of length at
/// most len_max that the grammar does not generate.
std::optional<std::string> find_missing(const Grammar& g, int len_max);
std::optional<std::string> find_missing(const CykRecognizer& g, int len_max);

BitString encode_grammar(const Grammar& g);
/// Throws Malformed.
Grammar decode_grammar(std::string_view bits);

}  // namespace fmw
