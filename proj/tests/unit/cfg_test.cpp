#include "doctest.h"
#include "fmw/cfg.hpp"
#include "oracles.hpp"

using namespace fmw;

namespace {

const char* const kCorpus[] = {
    "S -> a S b | eps",
    "S -> a S | b S | eps",
    "S -> a S b S | eps",
    "S -> a S a | b S b | a | b | eps",
    "alphabet x + * ( )\nE -> E + T | T\nT -> T * F | F\nF -> ( E ) | x",
};

}  // namespace

TEST_SUITE("cfg") {
  TEST_CASE("parse and print") {
    const auto g = parse_grammar("# comment\nS -> a S b | eps\n");
    CHECK(g.alphabet() == "ab");
    CHECK(g.nonterminals() == std::vector<std::string>{"S"});
    CHECK(g.productions().size() == 2);
    CHECK(parse_grammar(print_grammar(g)) == g);
    CHECK_THROWS_AS(parse_grammar("S -> a"), Error);       // one-letter alphabet
    CHECK_THROWS_AS(parse_grammar("S a b"), Error);
    CHECK_THROWS_AS(parse_grammar("alphabet a b\nS -> c"), Error);
  }

  TEST_CASE("CYK examples") {
    const auto g = parse_grammar(kCorpus[0]);
    CHECK(cyk_member(g, "aabb"));
    CHECK_FALSE(cyk_member(g, "aab"));
    CHECK(cyk_member(g, ""));
    try {
      cyk_member(g, "abc");
      FAIL("expected AlphabetMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::AlphabetMismatch);
    }
  }

  TEST_CASE("CYK agrees with derivation search on the corpus") {
    for (const char* text : kCorpus) {
      const auto g = parse_grammar(text);
      const auto language = testing::derivable_strings(g, 12, 6);
      const CykRecognizer cyk(g);
      const auto cnf = to_cnf(g);
      CHECK(cnf.is_cnf());
      const CykRecognizer cyk_cnf(cnf);
      for (const auto& w : testing::all_words(g.alphabet(), 6)) {
        INFO(text << " / " << w);
        REQUIRE(cyk(w) == (language.count(w) > 0));
        REQUIRE(cyk_cnf(w) == cyk(w));
      }
    }
  }

  TEST_CASE("CNF conversion") {
    const auto anbn = to_cnf(parse_grammar(kCorpus[0]));
    CHECK(anbn.is_cnf());
    CHECK(cyk_member(anbn, ""));
    CHECK(cyk_member(anbn, "aaabbb"));
    CHECK_FALSE(cyk_member(anbn, "abab"));

    const auto already = parse_grammar("S -> A B | a\nA -> a\nB -> b");
    CHECK(already.is_cnf());
    const auto again = to_cnf(already);
    for (const auto& w : testing::all_words("ab", 5)) REQUIRE(cyk_member(again, w) == cyk_member(already, w));

    const auto useless = to_cnf(parse_grammar("S -> a S b | a b\nU -> a U\nV -> b"));
    for (const auto& name : useless.nonterminals()) {
      CHECK(name != "U");
      CHECK(name != "V");
    }
    CHECK_FALSE(parse_grammar(kCorpus[0]).is_cnf());
  }

  TEST_CASE("least missing word") {
    CHECK_FALSE(find_missing(parse_grammar(kCorpus[1]), 4).has_value());
    CHECK(find_missing(parse_grammar(kCorpus[0]), 4) == std::string("a"));
    CHECK_FALSE(find_missing(parse_grammar(kCorpus[0]), 0).has_value());
    // a* and a*b: "ba" is the first gap.
    CHECK(find_missing(parse_grammar("S -> a S | eps\nS -> b"), 3) == std::string("ba"));
  }

  TEST_CASE("grammar codes") {
    for (const char* text : kCorpus) {
      const auto g = parse_grammar(text);
      CHECK(decode_grammar(encode_grammar(g)) == g);
    }
    CHECK_THROWS_AS(decode_grammar("0"), Error);
    CHECK_THROWS_AS(decode_grammar(encode_grammar(parse_grammar(kCorpus[0])) + "0"), Error);
  }
}
