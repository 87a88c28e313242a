#include <doctest.h>

#include "qmf/errors.hpp"
#include "qmf/forms.hpp"
#include "qmf/kronecker.hpp"
#include "qmf/qseries.hpp"

#include <random>

using namespace qmf;

namespace {

FourierSeries ints(int grain, std::vector<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return FourierSeries(grain, std::move(v));
}

FourierSeries random_series(std::mt19937& rng, int grain, std::size_t order) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 7);
  std::vector<Rational> v(order + 1);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return FourierSeries(grain, std::move(v));
}

bool same(const FourierSeries& a, const FourierSeries& b) { return !first_difference(a, b); }

}  // namespace

TEST_CASE("addition cancels and aligns grains") {
  auto s = add(ints(1, {1, 1}), ints(1, {2, -1}));
  CHECK(s.order() == 1);
  CHECK(s[0] == 3);
  CHECK(s[1] == 0);

  auto g = add(ints(1, {1, 1}), ints(2, {0, 1, 0}));
  CHECK(g.grain() == 2);
  CHECK(g.order() == 2);
  CHECK(g[0] == 1);
  CHECK(g[1] == 1);
  CHECK(g[2] == 1);

  auto e4 = forms::E4(20);
  CHECK(sub(e4, e4).is_zero());
}

TEST_CASE("truncation order is the smaller absolute exponent") {
  auto a = ints(1, {1, 2, 3, 4});  // to q^3
  auto b = ints(2, {1, 1, 1});     // to q^1
  auto s = add(a, b);
  CHECK(s.absolute_order() == 1);
  auto p = mul(a, b);
  CHECK(p.absolute_order() == 1);
}

TEST_CASE("products") {
  auto p = mul(ints(1, {1, 1, 0}), ints(1, {1, -1, 0}));
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);
  CHECK(p[2] == -1);

  const auto e4 = forms::E4(4), e6 = forms::E6(4);
  auto d = sub(mul(mul(e4, e4), e4), mul(e6, e6));
  const long expect[] = {0, 1728, -24 * 1728, 252 * 1728, -1472 * 1728};
  for (int n = 0; n <= 4; ++n) CHECK(d[n] == expect[n]);
}

TEST_CASE("kronecker and schoolbook convolution agree") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> sign(-1, 1);
  for (std::size_t n : {1u, 5u, 40u, 150u, 600u}) {
    std::vector<Integer> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = Integer(sign(rng)) * (Integer(1) << (i % 130)) + (i * 7919 % 1001);
      b[i] = Integer(sign(rng)) * (Integer(rng()) << (i % 70)) - static_cast<long>(i);
    }
    CHECK(detail::convolve_kronecker(a, b, n) == detail::convolve_schoolbook(a, b, n));
    CHECK(detail::convolve_kronecker(a, a, n) == detail::convolve_schoolbook(a, a, n));
  }
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    auto f = random_series(rng, 1 + trial % 2, 60);
    auto g = random_series(rng, 1, 45);
    auto h = random_series(rng, 2, 70);
    CHECK(same(add(f, g), add(g, f)));
    CHECK(same(mul(f, g), mul(g, f)));
    CHECK(same(mul(mul(f, g), h), mul(f, mul(g, h))));
    CHECK(same(add(add(f, g), h), add(f, add(g, h))));
    CHECK(same(mul(f, add(g, h)), add(mul(f, g), mul(f, h))));
    CHECK(same(d_operator(mul(f, g)), add(mul(d_operator(f), g), mul(f, d_operator(g)))));
  }
}

TEST_CASE("d operator") {
  CHECK(d_operator(FourierSeries::constant(1, 10)).is_zero());
  const auto e2 = forms::E2(100), e4 = forms::E4(100);
  CHECK(same(d_operator(e2), scale(Rational(1, 12), sub(mul(e2, e2), e4))));
  auto dd = d_operator(forms::delta(10));
  CHECK(dd[1] == 1);
  CHECK(dd[2] == -48);
  CHECK(dd[3] == 756);
  auto half = d_operator(ints(2, {0, 4, 0, 2}));
  CHECK(half[1] == 2);
  CHECK(half[3] == 3);
}

TEST_CASE("dilation") {
  auto q = ints(1, {0, 1, 0, 0});
  auto q2 = dilate(q, 2);
  CHECK(q2.absolute_order() == 6);
  CHECK(q2[2] == 1);
  CHECK(q2[1] == 0);

  auto x42 = scale(Rational(-1, 24), d_operator(forms::E2(30)));
  auto p1 = sub(x42, scale(8, dilate(x42, 2)));
  CHECK(p1.coefficient(2) == -2);

  auto g = dilate(ints(2, {0, 1, 0, 3}), 2);
  CHECK(g.grain() == 1);
  CHECK(g.coefficient(1) == 1);
  CHECK(g.coefficient(3) == 3);

  std::mt19937 rng(3);
  auto f = random_series(rng, 1, 40);
  CHECK(same(dilate(dilate(f, 2), 3), dilate(f, 6)));
  CHECK(same(d_operator(dilate(f, 3)), scale(3, dilate(d_operator(f), 3))));
}

TEST_CASE("half shift") {
  auto h = half_shift(ints(1, {1, 1, 1}));
  CHECK(h[1] == -1);
  CHECK(h[2] == 1);
  std::mt19937 rng(5);
  auto f = random_series(rng, 1, 30);
  CHECK(same(half_shift(half_shift(f)), f));
  CHECK(same(half_shift(regrain(f, 2)), half_shift(f)));
  CHECK_THROWS_AS(half_shift(ints(2, {0, 1, 0})), NonIntegerGrain);

  auto p1 = sub(scale(Rational(-1, 24), d_operator(forms::E2(200))),
                scale(Rational(-8, 24), dilate(d_operator(forms::E2(100)), 2)));
  auto neg = scale(-1, half_shift(p1));
  for (std::size_t n = 0; n <= 200; ++n) CHECK(neg[n] >= 0);
}

TEST_CASE("lambert blocks by double summation") {
  auto s = lambert_block(1, 1, 30, false);
  auto e2 = forms::E2(30);
  CHECK(same(s, scale(Rational(1, 24), sub(FourierSeries::constant(1, 30), e2))));

  auto x61 = lambert_block(4, 1, 10, true);
  CHECK(x61[1] == 1);
  CHECK(x61[2] == 18);
  CHECK(x61[3] == 84);

  auto x81 = lambert_block(6, 1, 10, true);
  CHECK(x81[1] == 1);
  CHECK(x81[2] == 66);
  CHECK(x81[3] == 732);
}

TEST_CASE("division, quadrature, grain reduction") {
  std::mt19937 rng(9);
  auto f = random_series(rng, 2, 40);
  auto g = add(ints(2, {0, 0, 0, 3}), random_series(rng, 2, 40));
  auto g_shift = mul(ints(2, {0, 0, 0, 1}), g);  // leading q^{3/2}
  auto quot = divide(mul(f, g_shift), g_shift);
  CHECK(!first_difference(quot, f, quot.absolute_order()));

  auto x = ints(1, {0, 3, 8, 9});
  CHECK(same(d_operator(antiderivative(x)), x));
  CHECK_THROWS_AS(antiderivative(ints(1, {1, 1})), InvalidInput);

  auto r = reduce_grain(ints(4, {1, 0, 0, 0, 5, 0, 0, 0, 7}));
  CHECK(r.grain() == 1);
  CHECK(r.order() == 2);
  CHECK(r[2] == 7);
}

TEST_CASE("first difference reports exponent and residual") {
  auto a = ints(2, {1, 0, 2, 5});
  auto b = ints(1, {1, 2, 0});
  auto d = first_difference(a, b);
  REQUIRE(d.has_value());
  CHECK(d->exponent == Rational(3, 2));
  CHECK(d->value == 5);
  CHECK_THROWS_AS(a.coefficient(Rational(2)), OrderExceeded);
}
