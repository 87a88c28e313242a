#include <doctest.h>

#include "qmf/errors.hpp"
#include "qmf/extremal.hpp"
#include "qmf/forms.hpp"

#include <algorithm>

using namespace qmf;
using namespace qmf::extremal;

namespace {
bool same(const FourierSeries& a, const FourierSeries& b) { return !first_difference(a, b); }
}  // namespace

TEST_CASE("X_{w,1} leading terms") {
  const auto x6 = x_w1(6, 10);
  CHECK(x6[1] == 1);
  CHECK(x6[2] == 18);
  CHECK(x6[3] == 84);

  const std::size_t n = 60;
  const auto x12 = x_w1(12, n);
  const auto s9 = forms::sigma_table(9, n);
  for (std::size_t k = 1; k <= n; ++k)
    CHECK(x12[k] == Rational(Integer(k) * s9[k] - forms::tau(k), 1050));

  const auto e2 = forms::E2(n), e4 = forms::E4(n), e6 = forms::E6(n);
  auto poly = add(scale(-12, mul(e2, mul(e4, e6))), scale(5, mul(e4, mul(e4, e4))));
  poly = add(poly, scale(7, mul(e6, e6)));
  CHECK(same(x12, scale(Rational(1, 3991680), poly)));
  CHECK_THROWS_AS(x_w1(7, 10), BadWeight);
  CHECK_THROWS_AS(x_w1(4, 10), BadWeight);
}

TEST_CASE("three constructions of X_{w,1} coincide up to weight 48") {
  const std::size_t n = 60;
  Rational last_valuation = 0;
  for (int w = 6; w <= 48; w += 2) {
    CAPTURE(w);
    const auto g = x_w1(w, n);
    CHECK(same(g, x_w1_by_derivative(w, n)));
    CHECK(same(g, extremal_by_vanishing(w, 1, n)));
    const auto v = g.valuation();
    REQUIRE(v.has_value());
    CHECK(g.coefficient(*v) == 1);
    if (w % 6 == 0) {
      CHECK(*v > last_valuation);
      last_valuation = *v;
    }
  }
}

TEST_CASE("Lee recurrences") {
  const std::size_t n = 100;
  std::vector<FourierSeries> x(53);
  for (int w = 6; w <= 52; w += 2) x[w] = x_w1(w, n);
  for (int w = 12; w + 4 <= 52; w += 6) {
    CAPTURE(w);
    auto r1 = add(scale(Rational(5 * w, 72), mul(x[6], x[w - 4])),
                  scale(Rational(7 * w, 72), mul(x[8], x[w - 6])));
    CHECK(same(d_operator(x[w]), r1));
    auto r2 = add(scale(Rational(5 * w, 72), mul(x[6], x[w - 2])),
                  scale(Rational(7 * w, 72), mul(x[8], x[w - 4])));
    CHECK(same(d_operator(x[w + 2]), r2));
    auto r3 = add(scale(240, mul(x[6], x[w])), scale(Rational(7 * w, 72), mul(x[8], x[w - 2])));
    r3 = add(r3, scale(Rational(5 * w, 72), mul(x[10], x[w - 4])));
    CHECK(same(d_operator(x[w + 4]), r3));
  }
}

TEST_CASE("depth-1 components") {
  const auto c12 = x_w1_components(12, 4);
  CHECK(c12.A[0] == Rational(1, 332640));
  CHECK(c12.A[1] == Rational(-1, 1155));
  CHECK(c12.B[0] == Rational(-1, 332640));
  CHECK(c12.B[1] == Rational(1, 1260));
  CHECK(c12.A[1] / c12.A[0] == -288);

  const auto c14 = x_w1_components(14, 4);
  CHECK(c14.A[0] == Rational(-1, 393120));  // the printed 391320 is a transposition
  CHECK(c14.A[1] == Rational(1, 16380));
  CHECK(c14.B[0] == Rational(1, 393120));
  const auto c16 = x_w1_components(16, 4);
  CHECK(c16.A[1] == Rational(-1, 6930));
  CHECK(c16.B[1] == Rational(1, 13860));

  const auto e2 = forms::E2(40);
  for (int w = 6; w <= 60; w += 2) {
    CAPTURE(w);
    const auto c = x_w1_components(w, 40);
    CHECK(same(add(c.A, mul(e2, c.B)), x_w1(w, 40)));
    CHECK(c.B[0] == -c.A[0]);
  }
}

TEST_CASE("constant terms alpha_{w,0}") {
  CHECK(alpha_w0_closed(6) == Rational(-1, 720));
  CHECK(alpha_w0_closed(12) == Rational(1, 332640));
  CHECK(alpha_w0_closed(18) == Rational(-12 * 18, 432 * 13 * 17) * alpha_w0_closed(12));
  CHECK_THROWS_AS(alpha_w0_closed(8), BadWeight);
  for (int w = 6; w <= 120; w += 6) {
    CAPTURE(w);
    CHECK(alpha_w0_closed(w) == alpha_w0_recurrence(w));
    CHECK(alpha_w0_closed(w) == x_w1_components(w, 1).A[0]);
  }
  for (int w = 6; w <= 60; w += 2) CHECK(alpha_w0_recurrence(w) == x_w1_components(w, 1).A[0]);
}

TEST_CASE("first-coefficient ratios") {
  for (int w = 12; w <= 60; w += 6) {
    CAPTURE(w);
    const auto c0 = x_w1_components(w, 1), c2 = x_w1_components(w + 2, 1),
               c4 = x_w1_components(w + 4, 1);
    const Rational d(w - 6);
    CHECK(c0.A[1] / c0.A[0] == Rational(-12 * (w - 3) * (w + 4)) / d);
    CHECK(c2.A[1] / c2.A[0] == Rational(-12 * (w * w - 9 * w - 24)) / d);
    CHECK(c4.A[1] / c4.A[0] == Rational(-12 * (w * w - 19 * w + 108)) / d);
    CHECK(c0.B[1] / c0.B[0] == Rational(-12 * (w - 1) * w) / d);
    CHECK(c2.B[1] / c2.B[0] == Rational(-12 * (w - 12) * (w + 1)) / d);
    CHECK(c4.B[1] / c4.B[0] == Rational(-12 * (w * w - 21 * w + 120)) / d);
  }
}

TEST_CASE("explicit depth-2 forms") {
  const std::size_t n = 60;
  const auto x4 = x_w2(4, n);
  CHECK(x4[1] == 1);
  CHECK(x4[2] == 6);
  CHECK(x4[3] == 12);
  const auto x8 = x_w2(8, n), x10 = x_w2(10, n);
  CHECK(x8[3] == 16);
  const auto s3 = forms::sigma_table(3, n), s5 = forms::sigma_table(5, n), s7 = forms::sigma_table(7, n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Integer K(k);
    CHECK(x8[k] == Rational(K * s5[k] - K * K * s3[k], 30));
    CHECK(x10[k] == Rational(K * s7[k] - K * K * s5[k], 126));
  }
  const auto x14 = x_w2(14, n);
  CHECK(x14[2] == 0);
  CHECK(x14[3] == 1);
  CHECK(x14[4] == Rational(93, 2));
  CHECK(x14[5] == 810);
  for (int w : {4, 8, 10, 12, 14}) {
    CAPTURE(w);
    CHECK(same(x_w2(w, n), extremal_by_vanishing(w, 2, n)));
  }
  CHECK_THROWS_AS(x_w2(16, n), BadWeight);
}

TEST_CASE("level-2 families") {
  const auto y4 = *level2_families(4, 10).Y_w2;
  const long want[] = {0, 1, 2, 12, 4, 30};
  for (int k = 0; k <= 5; ++k) CHECK(y4[k] == want[k]);
  CHECK(level2_families(8, 10).Y_w2->coefficient(4) == 38);
  const auto y16 = *level2_families(16, 12).Y_w2;
  CHECK(y16[4] == 1);
  CHECK(y16[5] == Rational(864, 25));
  CHECK(y16[6] == Rational(2736, 5));
  const auto f = level2_families(12, 20, 3);
  CHECK(same(*f.Y_w1_style, dilation_difference(x_w1(12, 20), pow_rational(3, 10), 3)));
}

TEST_CASE("exponents a_w") {
  CHECK(a_w_exponent(6) == 5);
  CHECK(a_w_exponent(12) == 10);
  for (int k = 1; k <= 100; ++k) CHECK(a_w_exponent(6 * k) == 5 * k);
  auto a = [](int w) { return a_w_exponent(w); };
  for (int w = 12; w <= 600; w += 6) {
    CAPTURE(w);
    CHECK(a(w) == std::min(a(w - 4) + 4, a(w - 6) + 5));
    CHECK(a(w + 2) == std::min(a(w - 2) + 4, a(w - 4) + 5));
    CHECK(a(w + 4) == std::min({a(w) + 4, a(w - 2) + 5, a(w - 4) + 7}));
  }
}
