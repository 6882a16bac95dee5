#include <random>
#include <set>

#include "doctest.h"
#include "fmw/eval.hpp"
#include "fmw/fragment.hpp"
#include "fmw/godel.hpp"
#include "fmw/operators.hpp"
#include "fmw/psi.hpp"
#include "fmw/syntax.hpp"
#include "oracles.hpp"

using namespace fmw;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::vector<Formula> random_corpus(std::size_t count) {
  std::vector<Formula> out;
  testing::FormulaGen ord(Vocabulary::parse("E:2 P:1 <"), 17);
  ord.fixpoints = true;
  testing::FormulaGen plain(Vocabulary::parse("H:3 Q:1"), 18);
  while (out.size() < count) {
    out.push_back(ord.sentence());
    out.push_back(plain.sentence());
    out.push_back(ord.so_sentence(out.size() % 2 == 0, 2));
  }
  return out;
}

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("construction invariants") {
    CHECK(code_of([] { Formula::atom("E", {}); }) == ErrorCode::IllFormedFormula);
    CHECK(code_of([] { Formula::atom("e", {"x"}); }) == ErrorCode::IllFormedFormula);
    CHECK(code_of([] { Formula::exists("X", Formula::eq("x", "x")); }) == ErrorCode::IllFormedFormula);
    CHECK(code_of([] { Formula::tc({"x"}, Formula::eq("x", "x"), {"y"}); }) == ErrorCode::IllFormedFormula);
  }

  TEST_CASE("free variables and sentences") {
    const auto f = parse_formula("Ex (E(x,y) & Ay E(y,z))");
    CHECK(free_variables(f) == std::set<std::string>{"y", "z"});
    CHECK_FALSE(is_sentence(f));
    CHECK(is_sentence(parse_formula("Ex Ey E(x,y)")));
    CHECK(bound_relations(parse_formula("EQ:1 Ex Q(x)")) == std::set<std::string>{"Q"});
    CHECK(free_relations(parse_formula("EQ:1 Ex (Q(x) & P(x))")) == std::set<std::string>{"P"});
  }

  TEST_CASE("check_sentence") {
    const auto e2 = Vocabulary::parse("E:2");
    CHECK_NOTHROW(check_sentence(parse_formula("Ex Ey E(x,y)"), e2));
    CHECK(code_of([&] { check_sentence(parse_formula("Ex E(x,x,x)"), e2); }) == ErrorCode::IllFormedFormula);
    CHECK(code_of([&] { check_sentence(parse_formula("Ex Ey x < y"), e2); }) == ErrorCode::IllFormedFormula);
    CHECK(code_of([&] { check_sentence(parse_formula("Ex P(x)"), e2); }) == ErrorCode::IllFormedFormula);
    CHECK_NOTHROW(check_sentence(parse_formula("Ex Ey x < y"), Vocabulary::parse("E:2 <")));
  }

  TEST_CASE("positivity") {
    CHECK(occurs_positively(parse_formula("Ex (Q(x) | ~E(x,x))"), "Q"));
    CHECK_FALSE(occurs_positively(parse_formula("Ex ~Q(x)"), "Q"));
    CHECK_FALSE(occurs_positively(parse_formula("Ex (Q(x) -> E(x,x))"), "Q"));
    CHECK(occurs_positively(parse_formula("Ex ~~Q(x)"), "Q"));
  }

  TEST_CASE("x != x folds to false, quantifiers keep it") {
    CHECK(parse_formula("Ex x != x").static_truth() == StaticTruth::False);
    CHECK(parse_formula("Ax x = x").static_truth() == StaticTruth::True);
    CHECK(parse_formula("Ex E(x,x)").static_truth() == StaticTruth::Unknown);
  }
}

TEST_SUITE("syntax") {
  TEST_CASE("parse examples") {
    const auto f = parse_formula("Ex R(x)");
    CHECK(f.kind() == NodeKind::Exists);
    CHECK(f.child().kind() == NodeKind::Atom);
    const auto g = parse_formula("EQ:2 Ax Ay (Q(x,y) -> Q(y,x))");
    CHECK(g.kind() == NodeKind::SoExists);
    CHECK(g.arity() == 2);
    CHECK(fragment_of(g) == Fragment::SOExists);
    CHECK(code_of([] { parse_formula("Ex R(x"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([] { parse_formula(""); }) == ErrorCode::SyntaxError);
  }

  TEST_CASE("quantifier scope and operator forms") {
    const auto f = parse_formula("Ex P(x) & Q(x)");
    CHECK(f.kind() == NodeKind::And);
    CHECK(parse_formula("P(x) v Q(x)") == parse_formula("P(x) | Q(x)"));
    CHECK(parse_formula("A(x) -> B(x) -> C(x)") == parse_formula("A(x) -> (B(x) -> C(x))"));
    const auto tc = parse_formula("TC[x,y: E(x,y)](s,t)");
    CHECK(tc.kind() == NodeKind::Tc);
    CHECK(tc.args() == std::vector<std::string>{"s", "t"});
    CHECK(parse_formula("LFP[Q,x: (P(x) | Q(x))](y)").kind() == NodeKind::Lfp);
  }

  TEST_CASE("print is a fixpoint of parse on normalized text") {
    for (const char* text : {"Ex R(x)", "EQ:2 Ax Ay (Q(x,y) -> Q(y,x))", "Ax (BIT(x,x) | x < x)",
                             "Ex TC[a,b: E(a,b)](x,x)", "Ex PFP[Q,u: ~Q(u)](x)"}) {
      const auto once = print_formula(parse_formula(text));
      CHECK(print_formula(parse_formula(once)) == once);
    }
  }

  TEST_CASE("parse after print is the identity on 1000 random trees") {
    for (const auto& f : random_corpus(1000)) REQUIRE(parse_formula(print_formula(f)) == f);
  }

  TEST_CASE("CHAR leaves print with hex payloads") {
    const auto leaf = Formula::char_leaf(CharKind::NpConp,
                                         {godel_encode(parse_formula("Ex P(x)")), godel_encode(parse_formula("Ax ~P(x)"))});
    const auto text = print_formula(leaf);
    CHECK(text.rfind("CHAR_NPCONP{", 0) == 0);
    CHECK(parse_formula(text) == leaf);
  }
}

TEST_SUITE("godel") {
  TEST_CASE("round trips") {
    for (const char* text : {"Ex R(x)", "EQ:1 AP:2 ER:3 Ax (Q(x) | P(x,x) | R(x,x,x))"}) {
      const auto f = parse_formula(text);
      CHECK(godel_decode(godel_encode(f)) == f);
    }
    for (const auto& f : random_corpus(1000)) REQUIRE(godel_decode(godel_encode(f)) == f);
  }

  TEST_CASE("distinct sentences of at most 4 nodes get distinct codes") {
    const auto all = testing::small_fo_sentences(4);
    std::set<BitString> codes;
    for (const auto& f : all) codes.insert(godel_encode(f));
    CHECK(codes.size() == all.size());
    CHECK(all.size() == 6 + 60 + 432);
  }

  TEST_CASE("junk is rejected") {
    for (const char* junk : {"", "0", "1", "1010", "11111111", "10110"}) {
      CHECK_THROWS_AS(godel_decode(junk), Error);
    }
    const auto code = godel_encode(parse_formula("Ex R(x)"));
    CHECK_THROWS_AS(godel_decode(code + "0"), Error);
    CHECK_THROWS_AS(godel_decode(code.substr(0, code.size() - 1)), Error);
  }

  TEST_CASE("tags follow the node order") {
    CHECK(node_tag(NodeKind::Exists) == 0);
    CHECK(node_tag(NodeKind::Forall) == 1);
    CHECK(node_tag(NodeKind::Char) == 16);
  }
}

TEST_SUITE("operators") {
  TEST_CASE("ordered operator examples") {
    const auto u = parse_formula("Ex R(x)");
    CHECK(apply_T_ord(u, Vocabulary::parse("R1:1 <")) == parse_formula("Ex R1(x)"));
    CHECK(apply_T_ord(u, Vocabulary::parse("E:2 <")) == parse_formula("Ex Ey1 E(y1,x)"));
    CHECK(apply_T_ord(u, Vocabulary::parse("H:3 P:1 <")) == parse_formula("Ex Ey1 H(y1,y1,x)"));
    CHECK(code_of([&] { apply_T_ord(parse_formula("Ex E(x,x)"), Vocabulary::parse("E:2 <")); }) ==
          ErrorCode::WrongSourceVocabulary);
    CHECK(code_of([&] { apply_T_ord(u, Vocabulary::parse("E:2")); }) == ErrorCode::NoOrderInTarget);
  }

  TEST_CASE("unordered operator examples") {
    const auto u = parse_formula("Ex Ey R(x,y)");
    CHECK(apply_T_unord(u, Vocabulary::parse("P:1 E:2")) == parse_formula("Ex Ey E(x,y)"));
    CHECK(apply_T_unord(u, Vocabulary::parse("H:3")) == parse_formula("Ex Ey Ez1 H(x,y,z1)"));
    CHECK(code_of([&] { apply_T_unord(u, Vocabulary::parse("P:1 Q:1")); }) == ErrorCode::AristotelianTarget);
    CHECK(code_of([&] { apply_T_unord(u, Vocabulary::parse("E:2 <")); }) == ErrorCode::OrderInTarget);
  }

  TEST_CASE("fresh variable skips names already used") {
    const auto u = parse_formula("Ey1 Ex (R(x) & y1 < x)");
    CHECK(fresh_variable(u, 'y') == "y2");
    const auto moved = apply_T_ord(u, Vocabulary::parse("E:2 <"));
    CHECK(is_sentence(moved));
    CHECK(all_variables(moved).count("y2") == 1);
    CHECK(all_variables(u).count("y2") == 0);
    CHECK(apply_T_ord(u, Vocabulary::parse("R1:1 <")).node_count() == u.node_count());
  }

  TEST_CASE("padding preserves truth for small source structures") {
    const auto tau = Vocabulary::parse("E:2 <");
    const auto u = parse_formula("Ex Ay (R(x) & (R(y) -> x < y | x = y))");
    const auto moved = apply_T_ord(u, tau);
    for (const auto& a : enumerate_structures(ordered_source_vocab(), 4))
      REQUIRE(models(a, u) == models(pad_ordered(a, tau), moved));
  }
}

TEST_SUITE("psi") {
  TEST_CASE("encoding examples") {
    CHECK(psi_encode("10") == parse_formula("Ex1 Ax2 ((x1 != x1) & (x2 != x2))"));
    CHECK(psi_encode("1") == parse_formula("Ex1 (x1 != x1)"));
    CHECK(code_of([] { psi_encode(""); }) == ErrorCode::EmptyString);
    CHECK(code_of([] { psi_encode("012"); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("recognition") {
    CHECK(psi_recognize(psi_encode("101")) == BitString("101"));
    CHECK_FALSE(psi_recognize(parse_formula("Ex1 (x1 = x1)")).has_value());
    CHECK(psi_recognize(parse_formula("Ax1 (x1 != x1)")) == BitString("0"));
    CHECK_FALSE(psi_recognize(parse_formula("Ex2 (x2 != x2)")).has_value());
    CHECK_FALSE(psi_recognize(parse_formula("Ex1 Ax2 ((x2 != x2) & (x1 != x1))")).has_value());
  }

  TEST_CASE("round trip for every string up to length 10") {
    for (int len = 1; len <= 10; ++len) {
      for (std::uint32_t v = 0; v < (1u << len); ++v) {
        BitString w;
        for (int i = len - 1; i >= 0; --i) w += ((v >> i) & 1) ? '1' : '0';
        REQUIRE(psi_recognize(psi_encode(w)) == w);
      }
    }
  }

  TEST_CASE("encoding sentences are false in small structures") {
    const auto all = enumerate_structures(Vocabulary::parse("E:2"), 3);
    for (const BitString w : {"1", "0", "10", "111", "0101"}) {
      const auto f = psi_encode(w);
      for (const auto& a : all) {
        REQUIRE_FALSE(models(a, f));
        REQUIRE_FALSE(testing::naive_models(a, f));
      }
    }
  }
}

TEST_SUITE("fragment") {
  TEST_CASE("classification examples") {
    CHECK(fragment_of(parse_formula("EQ:1 Ax (Q(x) v ~Q(x))")) == Fragment::SOExists);
    CHECK(fragment_of(parse_formula("AQ:1 Ax Q(x)")) == Fragment::SOForall);
    CHECK(fragment_of(parse_formula("Ex Ey TC[a,b: E(a,b)](x,y)")) == Fragment::FOTC);
    CHECK(fragment_of(parse_formula("Ex LFP[Q,u: (P(u) | Q(u))](x)")) == Fragment::FOLFP);
    CHECK(fragment_of(parse_formula("Ex PFP[Q,u: ~Q(u)](x)")) == Fragment::SOPFP);
    CHECK(fragment_of(parse_formula("Ex P(x)")) == Fragment::FO);
    const auto mixed = parse_formula("EQ:1 AP:1 Ax (Q(x) | P(x))");
    CHECK(fragment_of(mixed) == Fragment::Other);
    CHECK_FALSE(in_fragment(mixed, Fragment::SOExists));
    CHECK_FALSE(in_fragment(mixed, Fragment::SOForall));
    CHECK(in_fragment(mixed, Fragment::SOPFP));
  }

  TEST_CASE("FO sentences belong to every logic") {
    const auto f = parse_formula("Ex P(x)");
    for (auto t : {Fragment::FO, Fragment::SOExists, Fragment::SOForall, Fragment::FOTC, Fragment::FOLFP,
                   Fragment::SOPFP})
      CHECK(in_fragment(f, t));
  }

  TEST_CASE("class to logic") {
    CHECK(logic_of(ComplexityClass::NL) == Fragment::FOTC);
    CHECK(logic_of(ComplexityClass::P) == Fragment::FOLFP);
    CHECK(logic_of(ComplexityClass::NP) == Fragment::SOExists);
    CHECK(logic_of(ComplexityClass::CoNP) == Fragment::SOForall);
    CHECK(logic_of(ComplexityClass::PSPACE) == Fragment::SOPFP);
    CHECK(parse_complexity_class("coNP") == ComplexityClass::CoNP);
    CHECK_FALSE(parse_complexity_class("EXP").has_value());
  }
}
