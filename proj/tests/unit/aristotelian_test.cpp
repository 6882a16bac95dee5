#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "fmw/aristotelian.hpp"
#include "fmw/prefix_code.hpp"
#include "fmw/syntax.hpp"
#include "oracles.hpp"

using namespace fmw;

namespace {

Structure unary(int n, std::initializer_list<int> r) {
  Structure a(Vocabulary::parse("R:1"), n);
  for (int i : r) a.add("R", {i});
  return a;
}

Structure random_unary(std::mt19937_64& rng, int m, int n) {
  std::vector<Symbol> syms;
  for (int i = 1; i <= m; ++i) syms.push_back({"R" + std::to_string(i), 1});
  Structure a(Vocabulary(syms, false), n);
  for (int s = 0; s < m; ++s)
    for (int i = 0; i < n; ++i)
      if (rng() % 2) a.add(syms[static_cast<std::size_t>(s)].name, {i});
  return a;
}

}  // namespace

TEST_SUITE("aristotelian") {
  TEST_CASE("benc examples") {
    CHECK(benc(unary(2, {0})).bits() == "10101111011");
    CHECK(benc(unary(2, {})).bits() == "10" + encode_nat(2) + "1" + encode_nat(0));
    Structure e(Vocabulary::parse("E:2"), 2);
    try {
      benc(e);
      FAIL("expected NotAristotelian");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::NotAristotelian);
    }
  }

  TEST_CASE("uenc length is the condensed string read in binary") {
    CHECK(uenc_length(unary(2, {0})) == 1403);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const auto a = random_unary(rng, 2, 2 + static_cast<int>(rng() % 5));
      CHECK(uenc_length(a) == binary_to_bignat(benc(a).bits()));
    }
  }

  TEST_CASE("canonical order") {
    CHECK(canonical_order(unary(2, {0})) == std::vector<int>{1, 0});
    CHECK(canonical_order(unary(3, {})) == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("canonizing a relabelled copy gives the same structure") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const auto a = random_unary(rng, 1 + static_cast<int>(rng() % 3), n);
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      REQUIRE(canonize(a.permuted(perm)) == canonize(a));
      REQUIRE(testing::naive_isomorphic(canonize(a), a));
    }
  }

  TEST_CASE("reconstruct") {
    const auto a = unary(2, {0});
    CHECK(is_isomorphic(reconstruct(a.vocab(), benc(a)), a));
    const auto r = reconstruct(a.vocab(), "10" + encode_nat(2) + "1" + encode_nat(0));
    CHECK(r.size() == 2);
    CHECK(r.relation("R").count() == 0);
    try {
      reconstruct(a.vocab(), "10" + encode_nat(1) + "1" + encode_nat(0));
      FAIL("expected MalformedBenc");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::MalformedBenc);
    }
    CHECK_THROWS_AS(BencString::parse("0" + encode_nat(2) + "1" + encode_nat(0), 1), Error);
    CHECK_THROWS_AS(BencString::parse("11" + encode_nat(2) + "0" + encode_nat(0), 1), Error);
  }

  TEST_CASE("unary membership decision") {
    const auto vocab = Vocabulary::parse("R:1");
    CHECK(decide_unary_member(1403, parse_formula("Ex R(x)"), vocab));
    CHECK_FALSE(decide_unary_member(2, parse_formula("Ex R(x)"), vocab));
    CHECK_FALSE(decide_unary_member(uenc_length(unary(3, {})), parse_formula("Ex R(x)"), vocab));
    CHECK(decide_unary_member(uenc_length(unary(3, {})), parse_formula("Ax ~R(x)"), vocab));
  }

  TEST_CASE("length bounds for n <= 64, m <= 3") {
    using Float = boost::multiprecision::cpp_bin_float_50;
    std::mt19937_64 rng(3);
    for (int m = 1; m <= 3; ++m) {
      for (int n = 2; n <= 64; ++n) {
        const auto a = random_unary(rng, m, n);
        const double ln = std::log2(static_cast<double>(n));
        const double bound = 1 + std::pow(2.0, m) * (m + ln + 2 * std::log2(ln == 0 ? 1 : ln) + 7);
        REQUIRE(static_cast<double>(benc(a).bits().size()) <= bound);
        // Compare logarithms in extended precision.
        const Float lhs = boost::multiprecision::log2(Float(uenc_length(a)));
        const Float nlog = Float(n) * Float(ln) * Float(ln);
        const Float rhs = Float((m + 7) * (1 << m) + 1) + Float(1 << m) * boost::multiprecision::log2(nlog);
        REQUIRE(lhs < rhs);
        REQUIRE(uenc_length_within_bound(uenc_length(a), m, n));
      }
    }
  }
}
