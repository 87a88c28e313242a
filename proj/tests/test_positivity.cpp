#include <doctest.h>

#include "qmf/catalog.hpp"
#include "qmf/errors.hpp"
#include "qmf/extremal.hpp"
#include "qmf/positivity.hpp"

using namespace qmf;
using namespace qmf::positivity;

TEST_CASE("complete positivity of the level-2 families") {
  for (const char* label : {"Y4_2", "Y8_2", "Y10_2", "Y12_2"}) {
    INFO(label);
    const auto r = check_complete_positivity(label, 2000);
    CHECK(r.completely_positive);
    CHECK_FALSE(r.first_negative);
    CHECK(r.order == 2000);
  }
  for (const char* label : {"P1_alt", "P3_alt", "E2_odd", "E2_comb"}) {
    INFO(label);
    CHECK(check_complete_positivity(label, 2000).completely_positive);
  }
  // Beyond the proven range, reported only.
  for (const char* label : {"Y14_2", "Y16_2"}) CHECK(check_complete_positivity(label, 300).completely_positive);
}

TEST_CASE("first negative coefficients") {
  const auto p1 = check_complete_positivity("P1", 200);
  REQUIRE(p1.first_negative);
  CHECK(p1.first_negative->exponent == 2);
  CHECK(p1.first_negative->value == -2);  // 2 (sigma_1(2) - 4 sigma_1(1))
  CHECK_FALSE(p1.completely_positive);
  // X~_{12,2} is not completely positive.
  CHECK_FALSE(check_complete_positivity("Xtilde12_2", 200).completely_positive);
}

TEST_CASE("sign rules for the dilation differences") {
  const std::size_t N = 2000;
  for (const char* label : {"P1", "P3"}) {
    INFO(label);
    const auto rule = stated_sign_rule(label);
    REQUIRE(rule);
    CHECK_FALSE(first_sign_mismatch(lookup_form(label).build(N), *rule, N));
  }
  // The n = 2^k m, k >= 2 coefficient of P2 is -2^k sigma_1(m), so the stated
  // rule first breaks at n = 4 and the true rule is "positive iff n odd".
  const auto p2 = lookup_form("P2").build(N);
  const auto miss = first_sign_mismatch(p2, *stated_sign_rule("P2"), N);
  REQUIRE(miss);
  CHECK(miss->exponent == 4);
  CHECK(miss->value == -4);
  CHECK_FALSE(first_sign_mismatch(p2, [](std::size_t n) { return n % 2 == 1 ? 1 : -1; }, N));

  const auto p4 = lookup_form("P4").build(N);
  CHECK_FALSE(first_sign_mismatch(p4, *stated_sign_rule("P4"), N));
}

TEST_CASE("densities") {
  const auto p2 = sign_pattern("P2", 100000);
  CHECK(p2.predicted == Rational(3, 4));
  CHECK(abs(p2.density - Rational(1, 2)) < Rational(1, 100));
  const auto p4 = sign_pattern("P4", 10000);
  CHECK(abs(p4.density - Rational(1, 2)) < Rational(2, 100));
  const auto xd = sign_pattern("X42Delta", 10000);
  CHECK(abs(xd.density - Rational(1, 2)) < Rational(5, 100));
  CHECK(xd.density >= 0);
  CHECK(xd.density <= 1);
  CHECK_FALSE(predicted_density("E4"));
}

TEST_CASE("ratio infima") {
  const auto x4 = ratio_infimum(extremal::x_w2(4, 8192), 2, 4096);
  REQUIRE(x4.min_ratio);
  CHECK(*x4.min_ratio > 4);
  CHECK(*x4.min_ratio <= 4 + Rational(1, 512));
  CHECK(x4.violations.empty());
  const auto x8 = ratio_infimum(extremal::x_w2(8, 4096), 2, 2048);
  CHECK(*x8.min_ratio > 64);
  const auto x10 = ratio_infimum(extremal::x_w2(10, 4096), 2, 2048);
  CHECK(*x10.min_ratio > 256);
  // q alone: a_2 = 0 gives ratio 0 at n = 1, larger n are violations.
  const auto q = ratio_infimum(FourierSeries(1, {0, 1, 0, 0, 0}), 2, 2);
  CHECK(q.min_ratio == Rational(0));
  CHECK(q.violations == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(ratio_infimum(FourierSeries(1, {0, 1}), 2, 2), OrderExceeded);
}

TEST_CASE("doubling inequality for X_{12,2}") {
  const auto r = x122_doubling_check(500);
  CHECK(r.ok);
  CHECK(r.ineq1_ok);
  CHECK(r.ineq2_ok);
  const auto c = extremal::x_w2(12, 4);
  CHECK(c[4] >= 1024 * c[2]);
  const auto bad = x122_doubling_check(50, 11);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  CHECK(*bad.witness <= 10);
  CHECK(doubling_ineq1_lower(3) > 0);
  CHECK(doubling_ineq2_lower(1) > 0);
}
