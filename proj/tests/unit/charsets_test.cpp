#include <map>

#include "doctest.h"
#include "fmw/charsets.hpp"
#include "fmw/godel.hpp"
#include "fmw/syntax.hpp"
#include "oracles.hpp"

using namespace fmw;

namespace {

const Vocabulary kOrd = Vocabulary::parse("P:1 <");
const Vocabulary kE = Vocabulary::parse("E:2");
const Vocabulary kP = Vocabulary::parse("P:1");

// Differs from "some edge" only on structures with at least three elements.
const Formula kSomeEdge = parse_formula("Ex Ey E(x,y)");
const Formula kEdgeOrBig = parse_formula("(Ex Ey E(x,y) | Ex Ey Ez ((x != y & y != z) & x != z))");

}  // namespace

TEST_SUITE("charsets") {
  TEST_CASE("bounds") {
    CHECK(ordered_bound(2) == 2);
    CHECK(ordered_bound(127) == 2);
    CHECK(ordered_bound(128) == 3);
    CHECK(unordered_bound(4) == 2);
    CHECK(unordered_bound(9) == 3);
    for (std::uint64_t x = 1; x < 5000; ++x) {
      REQUIRE(ordered_bound(x) == testing::iterated_bit_length(x, 3));
      REQUIRE(unordered_bound(x) == testing::iterated_bit_length(x, 2));
    }
  }

  TEST_CASE("ordered set examples") {
    const auto u = parse_formula("Ex P(x)");
    for (const auto& a : enumerate_structures(kOrd, 4)) {
      REQUIRE(member_S_ord(a, u, identity_machine(), u));
      REQUIRE_FALSE(member_S_ord(a, u, reject_machine(), u));
    }
    // Unreachable for real structures: the bound is below two.
    CHECK(reduction_holds_upto(u, reject_machine(), u, kOrd, 1));
    Structure unordered(kP, 2);
    CHECK_THROWS_AS(member_S_ord(unordered, u, identity_machine(), u), Error);
  }

  TEST_CASE("unordered set examples and size dependence") {
    for (const auto& a : enumerate_structures(kE, 3)) {
      REQUIRE(member_S_unord(a, kSomeEdge, identity_machine(), kSomeEdge));
      // Broken exactly from size three on: members iff the bound stays at two.
      const bool expect = unordered_bound(encode_bin(a).size()) < 3;
      REQUIRE(member_S_unord(a, kSomeEdge, identity_machine(), kEdgeOrBig) == expect);
    }
    Structure ordered(kOrd, 2);
    CHECK_THROWS_AS(member_S_unord(ordered, kSomeEdge, identity_machine(), kSomeEdge), Error);
  }

  TEST_CASE("NP/coNP set examples") {
    const auto ex = parse_formula("Ex P(x)");
    for (const auto& a : enumerate_structures(kP, 4)) {
      REQUIRE(member_S_npconp(a, parse_formula("Ax ~P(x)"), ex));
      REQUIRE_FALSE(member_S_npconp(a, ex, ex));
      REQUIRE(member_S_npconp(a, parse_formula("Ax x = x"), parse_formula("Ex x != x")));
    }
  }

  TEST_CASE("grammar set examples") {
    const auto universal = parse_grammar("S -> a S | b S | eps");
    const auto anbn = parse_grammar("S -> a S b | eps");
    const auto gap5 = parse_grammar(
        "S -> eps | X | X X | X X X | X X X X | X X X X X X T\nT -> X T | eps\nX -> a | b");
    CHECK(find_missing(gap5, 6) == std::string("aaaaa"));
    for (const auto& a : enumerate_structures(kOrd, 4)) {
      REQUIRE(ordered_bound(encode_bin(a).size()) == 2);
      REQUIRE(member_S_cfg(a, universal));
      REQUIRE_FALSE(member_S_cfg(a, anbn));
      REQUIRE(member_S_cfg(a, gap5));
    }
  }

  TEST_CASE("decision procedures match the literal definitions") {
    const auto ex = parse_formula("Ex P(x)");
    for (const auto& a : enumerate_structures(kOrd, 4)) {
      for (const auto& t : {identity_machine(), reject_machine(), accept_machine()})
        REQUIRE(member_S_ord(a, ex, t, ex) == testing::literal_S_ord(a, ex, t, ex));
    }
    const auto all = enumerate_structures(kE, 3);
    for (std::size_t i = 0; i < all.size(); i += (all[i].size() == 2 ? 1 : 16)) {
      const auto& a = all[i];
      for (const auto& t : {identity_machine(), reject_machine(), accept_machine()}) {
        REQUIRE(member_S_unord(a, kSomeEdge, t, kEdgeOrBig) == testing::literal_S_unord(a, kSomeEdge, t, kEdgeOrBig));
      }
    }
  }

  TEST_CASE("CHAR leaves") {
    const auto u = parse_formula("Ex P(x)");
    const auto ord = char_ord(u, identity_machine(), u);
    CHECK(ord.kind() == NodeKind::Char);
    CHECK(ord.payloads().size() == 3);
    CHECK_FALSE(valid_upto(ord, kOrd, 4).has_value());

    const auto h = char_unord(kSomeEdge, identity_machine(), kEdgeOrBig);
    const auto co = cochar_unord(kSomeEdge, identity_machine(), kEdgeOrBig);
    for (const auto& a : enumerate_structures(kE, 3)) {
      REQUIRE_FALSE(models(a, Formula::conjunction(h, co)));
      REQUIRE(models(a, Formula::disjunction(h, co)));
    }
    CHECK_FALSE(valid_upto(char_npconp(parse_formula("Ax ~P(x)"), u), kP, 4).has_value());

    try {
      char_ord(Formula::conjunction(u, ord), identity_machine(), u);
      FAIL("expected PayloadNotCharFree");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PayloadNotCharFree);
    }
    CHECK_THROWS_AS(char_sentence(CharKind::NpConp, {"0", "1"}), Error);
    CHECK_THROWS_AS(char_sentence(CharKind::NpConp, {godel_encode(u)}), Error);
  }

  TEST_CASE("cache keeps complemented leaves consistent") {
    EvalOptions opts;
    opts.cache = std::make_shared<CharCache>();
    const auto h = char_unord(kSomeEdge, identity_machine(), kEdgeOrBig);
    const auto co = cochar_unord(kSomeEdge, identity_machine(), kEdgeOrBig);
    for (const auto& a : enumerate_structures(kE, 3)) {
      const bool plain = models(a, h);
      REQUIRE(models(a, h, opts) == plain);
      REQUIRE(models(a, co, opts) == !plain);
    }
    // Two kinds times two size bounds.
    CHECK(opts.cache->size() == 4);
  }
}
