#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bruhat/chain.hpp"
#include "bruhat/class_enum.hpp"
#include "bruhat/order.hpp"
#include "oracles.hpp"

using namespace bruhat;

namespace {

const BinaryMatrix kIncomparableA = BinaryMatrix::from_rows({"1001", "1100", "0110", "0011"});
const BinaryMatrix kIncomparableC = BinaryMatrix::from_rows({"0110", "1100", "1001", "0011"});

}  // namespace

TEST_CASE("bruhat order predicate") {
  CHECK(bruhat_leq(named::I2(), named::L2()));
  CHECK_FALSE(bruhat_leq(named::L2(), named::I2()));
  CHECK(bruhat_leq(kIncomparableA, kIncomparableA));
  CHECK_FALSE(bruhat_leq(kIncomparableA, kIncomparableC));
  CHECK_FALSE(bruhat_leq(kIncomparableC, kIncomparableA));
  CHECK_FALSE(bruhat_compare(kIncomparableA, kIncomparableC).comparable());
  CHECK(bruhat_compare(kIncomparableA, kIncomparableA).equal());
  CHECK_FALSE(bruhat_less(kIncomparableA, kIncomparableA));

  CHECK_THROWS_AS(bruhat_leq(named::I2(), named::J2()), MarginMismatch);
  CHECK_THROWS_AS(bruhat_leq(named::I2(), named::identity(3)), MarginMismatch);
}

TEST_CASE("bruhat order is a partial order on small classes") {
  for (const auto& mp : {MarginPair::uniform(4, 2), MarginPair{{2, 2, 1}, {2, 2, 1}}}) {
    const auto members = oracle::brute_class(mp.row_sums, mp.col_sums);
    for (const auto& a : members) {
      REQUIRE(bruhat_leq(a, a));
      for (const auto& c : members) {
        const bool ac = bruhat_leq(a, c);
        REQUIRE(ac == oracle::bruhat_leq(a, c));
        if (ac && bruhat_leq(c, a)) REQUIRE(a == c);
        if (!ac) continue;
        for (const auto& d : members) {
          if (bruhat_leq(c, d)) REQUIRE(bruhat_leq(a, d));
        }
      }
    }
  }
}

TEST_CASE("secondary bruhat order") {
  CHECK(secondary_bruhat_leq(named::I2(), named::L2()));
  CHECK_FALSE(secondary_bruhat_leq(named::L2(), named::I2()));
  const auto e4 = build_extremes(4);
  CHECK(secondary_bruhat_leq(e4.minimal, e4.maximal));
  CHECK_FALSE(secondary_bruhat_leq(e4.maximal, e4.minimal));
  CHECK(secondary_bruhat_leq(e4.minimal, e4.minimal));
  CHECK_THROWS_AS(secondary_bruhat_leq(e4.minimal, e4.maximal, SearchLimits{1}), SearchBudgetExceeded);
  CHECK_THROWS_AS(secondary_bruhat_leq(named::I2(), named::J2()), MarginMismatch);
}

TEST_CASE("secondary order agrees with bruhat order on A(n,2), n <= 4") {
  for (std::size_t n : {2U, 3U, 4U}) {
    const auto members = enumerate_class(MarginPair::uniform(n, 2));
    for (const auto& a : members) {
      for (const auto& c : members) {
        const bool sec = secondary_bruhat_leq(a, c);
        REQUIRE(sec == bruhat_leq(a, c));
        if (sec && a != c) REQUIRE(inversion_count(a) < inversion_count(c));
      }
    }
  }
}

TEST_CASE("secondary order on sampled pairs of A(5,2)") {
  const auto members = enumerate_class(MarginPair::uniform(5, 2));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  std::size_t comparable = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& a = members[pick(rng)];
    const auto& c = members[pick(rng)];
    const bool b = bruhat_leq(a, c);
    REQUIRE(secondary_bruhat_leq(a, c) == b);
    comparable += b ? 1 : 0;
  }
  CHECK(comparable > 0);
}

TEST_CASE("secondary order implies bruhat order on A(2,2,1)") {
  const auto members = enumerate_class(MarginPair{{2, 2, 1}, {2, 2, 1}});
  for (const auto& a : members) {
    for (const auto& c : members) {
      if (secondary_bruhat_leq(a, c)) REQUIRE(bruhat_leq(a, c));
    }
  }
}

TEST_CASE("minimal and maximal members of A(n,2)") {
  const auto p6 = direct_sum({named::J2(), named::J2(), named::J2()});
  const auto f3f3 = direct_sum({named::F3(), named::F3()});
  CHECK(is_minimal_An2(p6));
  CHECK(is_minimal_An2(f3f3));
  CHECK(is_minimal_An2(direct_sum({named::F3(), named::J2()})));
  CHECK_FALSE(is_minimal_An2(build_extremes(4).maximal));
  CHECK(is_maximal_An2(build_extremes(6).maximal));
  CHECK_FALSE(is_maximal_An2(p6));
  CHECK(is_maximal_An2(reverse_columns(f3f3)));

  CHECK_THROWS_AS(is_minimal_An2(named::I2()), NotInClass);
  CHECK_THROWS_AS(is_maximal_An2(BinaryMatrix::from_rows({"110", "110"})), NotInClass);
}

TEST_CASE("column reversal duality") {
  CHECK(duality_check(named::I2(), named::L2()));
  const auto e4 = build_extremes(4);
  CHECK(duality_check(e4.minimal, e4.maximal));
  CHECK(bruhat_leq(e4.minimal, e4.maximal));
  CHECK(bruhat_leq(reverse_columns(e4.maximal), reverse_columns(e4.minimal)));

  for (const auto& mp : {MarginPair{{2, 2, 1}, {2, 2, 1}}, MarginPair::uniform(4, 2), MarginPair{{2, 1, 1}, {1, 2, 1}}}) {
    const auto members = enumerate_class(mp);
    for (const auto& a : members) {
      for (const auto& c : members) REQUIRE(duality_check(a, c));
    }
  }
}
