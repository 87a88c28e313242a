#include <doctest.h>

#include "qmf/errors.hpp"
#include "qmf/extremal.hpp"
#include "qmf/forms.hpp"

using namespace qmf;
using namespace qmf::forms;

namespace {
bool same(const FourierSeries& a, const FourierSeries& b) { return !first_difference(a, b); }

Integer brute_r4(long n) {
  long count = 0;
  long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b)
      for (long c = -r; c <= r; ++c) {
        long rest = n - a * a - b * b - c * c;
        if (rest < 0) continue;
        long d = 0;
        while ((d + 1) * (d + 1) <= rest) ++d;
        if (d * d == rest) count += d == 0 ? 1 : 2;
      }
  return count;
}
}  // namespace

TEST_CASE("divisor sums") {
  CHECK(sigma(1, 6) == 12);
  CHECK(sigma(0, 1) == 1);
  CHECK(sigma(9, 2) == 513);
  for (unsigned a : {0u, 1u, 3u, 5u, 9u}) {
    auto t = sigma_table(a, 300);
    for (std::uint64_t n = 1; n <= 300; ++n) CHECK(t[n] == sigma(a, n));
  }
}

TEST_CASE("sums of four squares") {
  CHECK(r4(0) == 1);
  CHECK(r4(1) == 8);
  CHECK(r4(2) == 24);
  for (long n = 0; n <= 200; ++n) CHECK(r4(n) == brute_r4(n));
}

TEST_CASE("tau from the eta product") {
  CHECK(tau(1) == 1);
  CHECK(tau(2) == -24);
  CHECK(tau(3) == 252);
  CHECK(tau(4) == -1472);
  CHECK(tau(5) == 4830);
  CHECK_THROWS_AS(tau(kTauLimit + 1), OrderExceeded);

  const auto e4 = E4(200), e6 = E6(200), e2 = E2(200);
  const auto d = delta(200);
  CHECK(same(d, scale(Rational(1, 1728), sub(mul(mul(e4, e4), e4), mul(e6, e6)))));
  CHECK(same(d_operator(d), mul(e2, d)));
}

TEST_CASE("Eisenstein series") {
  const auto e2 = E2(10);
  const long want[] = {1, -24, -72, -96, -168};
  for (int n = 0; n < 5; ++n) CHECK(e2[n] == want[n]);
  CHECK(E4(3)[1] == 240);
  const auto e8 = eisenstein(Eisenstein::E8, 100);
  const auto e10 = eisenstein(Eisenstein::E10, 100);
  CHECK(e8[1] == 480);
  const auto s7 = sigma_table(7, 100), s9 = sigma_table(9, 100);
  for (std::size_t n = 1; n <= 100; ++n) {
    CHECK(e8[n] == 480 * s7[n]);
    CHECK(e10[n] == -264 * s9[n]);
  }
}

TEST_CASE("Serre derivative") {
  CHECK(serre_derivative(FourierSeries::constant(1, 20), 0).is_zero());
  const auto x6 = extremal::x_w1(6, 80);
  CHECK(same(scale(Rational(12, 7), serre_derivative(x6, 5)), extremal::x_w1(8, 80)));
  // d(Delta) = E2 Delta, so the weight-12 Serre derivative of Delta vanishes.
  CHECK(serre_derivative(delta(120), 12).is_zero());
}

TEST_CASE("Martin-Royer bracket") {
  const auto f = extremal::x_w1(6, 80);
  const auto g = E4(80);
  CHECK(same(martin_royer_bracket(f, g, 0, 6, 0, 4, 0), mul(f, g)));
  const int m = 5;
  const auto df = d_operator(f), ddf = d_operator(df);
  auto closed = sub(scale(m * (m + 1), mul(ddf, f)), scale((m + 1) * (m + 1), mul(df, df)));
  CHECK(same(martin_royer_bracket(f, f, 2, m, 0, m, 0), closed));
  auto br = scale(Rational(-1, 6), martin_royer_bracket(f, f, 2, 6, 1, 6, 1));
  CHECK(same(br, mul(delta(80), extremal::x_w2(4, 80))));
  CHECK_THROWS_AS(martin_royer_bracket(f, f, 2, 6, 4, 6, 1), ParameterRange);
}

TEST_CASE("theta forms") {
  const auto th = theta_forms(40);
  CHECK(th.H2.grain() == 2);
  CHECK(th.A.has_integer_exponents());
  CHECK(th.B.has_integer_exponents());
  CHECK(th.B.coefficient(0) == 2);
  CHECK(th.B.coefficient(1) == 48);
  CHECK(th.A.coefficient(0) == 0);
  CHECK(th.A.coefficient(1) == 256);
  const auto theta3 = add(th.H2, th.H4);
  CHECK(theta3.coefficient(Rational(1, 2)) == 8);
  for (long n = 0; n <= 40; ++n) {
    CHECK(th.B.coefficient(n) == 2 * r4(2 * n));
    if (n >= 1) CHECK(th.A.coefficient(n) > 0);
  }
}

TEST_CASE("composite forms") {
  const auto x = form_X42Delta(8);
  // q^4 term: 1*252 + 6*(-24) + 12*1 = 120.
  const long want[] = {0, 0, 1, -18, 120, -220, -1620, 11676};
  for (int n = 0; n < 8; ++n) CHECK(x[n] == want[n]);

  CHECK(form_P4(6).coefficient(2) == 1);
  CHECK(form_P4(6).coefficient(1) == 0);

  const auto th = theta_forms(60);
  for (const auto& k : {form_K10(th), form_K12(th), form_K14(th)}) CHECK(k.has_integer_exponents());

  const auto p2 = form_P2(12);
  CHECK(p2.coefficient(4) == -4);  // sigma(4) - 5 sigma(2) + 4 sigma(1)

  const auto l = form_L(6);
  CHECK(l.grain() == 1);
  CHECK(l.coefficient(0) == 0);
  CHECK(l.coefficient(3) == 975421440);
  const auto f = form_F(6);
  CHECK(f.coefficient(0) == 0);
  CHECK(f.coefficient(3) == 3657830400);
}
