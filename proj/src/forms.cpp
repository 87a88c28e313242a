#include "qmf/forms.hpp"

#include "qmf/errors.hpp"
#include "qmf/extremal.hpp"

namespace qmf::forms {
namespace {

FourierSeries divisor_series(const Rational& c0, const Rational& c, unsigned a, std::size_t order) {
  const auto s = sigma_table(a, order);
  std::vector<Rational> v(order + 1);
  v[0] = c0;
  for (std::size_t n = 1; n <= order; ++n) v[n] = c * s[n];
  return FourierSeries(1, std::move(v));
}

std::size_t ceil_order(const FourierSeries& f) {
  const Rational a = f.absolute_order();
  Integer q = numerator_of(a) / denominator_of(a);
  if (q * denominator_of(a) != numerator_of(a)) ++q;
  return q.convert_to<std::size_t>();
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FourierSeries prod(std::initializer_list<const FourierSeries*> fs) {
  auto it = fs.begin();
  FourierSeries r = **it;
  for (++it; it != fs.end(); ++it) r = mul(r, **it);
  return r;
}

}  // namespace

FourierSeries eisenstein(Eisenstein which, std::size_t order) {
  switch (which) {
    case Eisenstein::E2: return divisor_series(1, -24, 1, order);
    case Eisenstein::E4: return divisor_series(1, 240, 3, order);
    case Eisenstein::E6: return divisor_series(1, -504, 5, order);
    case Eisenstein::E8: {
      const auto e4 = E4(order);
      return mul(e4, e4);
    }
    case Eisenstein::E10: return mul(E4(order), E6(order));
  }
  throw InvalidInput("unknown Eisenstein series");
}

FourierSeries delta(std::size_t order) {
  const auto t = tau_table(std::max<std::size_t>(order, 1));
  std::vector<Rational> v(order + 1);
  for (std::size_t n = 1; n <= order; ++n) v[n] = Rational((*t)[n]);
  return FourierSeries(1, std::move(v));
}

FourierSeries serre_derivative(const FourierSeries& f, const Rational& k) {
  return sub(d_operator(f), scale(k / 12, mul(E2(ceil_order(f)), f)));
}

FourierSeries martin_royer_bracket(const FourierSeries& f, const FourierSeries& g, int n, int k,
                                   int s, int l, int t) {
  if (n < 0 || s < 0 || t < 0 || 2 * s > k || 2 * t > l)
    throw ParameterRange("bracket needs n >= 0, 0 <= s <= k/2, 0 <= t <= l/2");
  std::vector<FourierSeries> df{f}, dg{g};
  for (int r = 1; r <= n; ++r) {
    df.push_back(d_operator(df.back()));
    dg.push_back(d_operator(dg.back()));
  }
  FourierSeries acc = scale(0, mul(f, g));
  for (int r = 0; r <= n; ++r) {
    Rational c(binomial(k - s + n - 1, n - r) * binomial(l - t + n - 1, r));
    if (r % 2 == 1) c = -c;
    if (c == 0) continue;
    acc = add(acc, scale(c, mul(df[r], dg[n - r])));
  }
  return acc;
}

ThetaForms theta_forms(std::size_t order) {
  const std::size_t n = 2 * order;
  std::vector<Rational> h2(n + 1), h4(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const Integer r = r4(k);
    if (k % 2 == 1) h2[k] = 2 * r;
    h4[k] = (k % 2 == 1) ? Rational(-r) : Rational(r);
  }
  FourierSeries H2(2, std::move(h2)), H4(2, std::move(h4));
  FourierSeries A = reduce_grain(mul(H2, H2));
  FourierSeries B = reduce_grain(add(H2, scale(2, H4)));
  return {std::move(H2), std::move(H4), std::move(A), std::move(B)};
}

FourierSeries form_F(std::size_t order) {
  const auto e2 = E2(order), e4 = E4(order), e6 = E6(order);
  const auto e2e2 = mul(e2, e2), e4e4 = mul(e4, e4), e6e6 = mul(e6, e6);
  const auto e4c = mul(e4e4, e4);
  FourierSeries r = scale(49, mul(e2e2, e4c));
  r = sub(r, scale(25, mul(e2e2, e6e6)));
  r = sub(r, scale(48, prod({&e2, &e4e4, &e6})));
  r = sub(r, scale(25, mul(e4e4, e4e4)));
  r = add(r, scale(49, mul(e4, e6e6)));
  return r;
}

FourierSeries form_G(const ThetaForms& th) {
  const auto& h2 = th.H2;
  const auto& h4 = th.H4;
  const auto inner = add(add(scale(2, mul(h2, h2)), scale(7, mul(h2, h4))), scale(7, mul(h4, h4)));
  return mul(power(h2, 5), inner);
}

namespace {

// sum_i c_i H2^{deg-i} H4^i
FourierSeries binary_form(const ThetaForms& th, const std::vector<long>& c) {
  const std::size_t deg = c.size() - 1;
  std::vector<FourierSeries> p2{power(th.H2, 0)}, p4{power(th.H4, 0)};
  for (std::size_t i = 1; i <= deg; ++i) {
    p2.push_back(mul(p2.back(), th.H2));
    p4.push_back(mul(p4.back(), th.H4));
  }
  FourierSeries acc = scale(0, p2[0]);
  for (std::size_t i = 0; i <= deg; ++i)
    if (c[i] != 0) acc = add(acc, scale(c[i], mul(p2[deg - i], p4[i])));
  return acc;
}

}  // namespace

FourierSeries form_K10(const ThetaForms& th) {
  return scale(-2, mul(binary_form(th, {23, 46, 54, 16, 8}), binary_form(th, {1, 2})));
}

FourierSeries form_K12(const ThetaForms& th) {
  return scale(-2, mul(binary_form(th, {10, 35, 3, -64, -32}), binary_form(th, {1, 1, 1})));
}

FourierSeries form_K14(const ThetaForms& th) {
  return mul(binary_form(th, {26, 78, 177, 182, 51, -48, -16}), binary_form(th, {1, 2}));
}

FourierSeries form_L(std::size_t order) {
  const auto th = theta_forms(order);
  const auto e2 = E2(order);
  FourierSeries r = mul(form_K10(th), mul(e2, e2));
  r = add(r, mul(form_K12(th), e2));
  r = add(r, form_K14(th));
  return reduce_grain(r);
}

FourierSeries form_script_L10(std::size_t order) {
  const auto th = theta_forms(order);
  const auto f = form_F(order);
  const auto g = form_G(th);
  return sub(mul(d_operator(f), g), mul(f, d_operator(g)));
}

FourierSeries form_P1(std::size_t order) {
  return extremal::dilation_difference(extremal::x_w2(4, order), 8, 2);
}

FourierSeries form_P2(std::size_t order) {
  const auto e2 = E2(order);
  FourierSeries r = sub(scale(5, dilate(e2, 2)), e2);
  r = sub(r, scale(4, dilate(e2, 4)));
  return scale(Rational(1, 24), r);
}

FourierSeries form_P3(std::size_t order) {
  return extremal::dilation_difference(extremal::x_w1(6, order), 32, 2);
}

FourierSeries form_P4(std::size_t order) {
  return extremal::dilation_difference(extremal::x_w1(12, order), 2048, 2);
}

FourierSeries form_X42Delta(std::size_t order) {
  return mul(extremal::x_w2(4, order), delta(order));
}

CompositeForms composite_forms(std::size_t order) {
  const auto th = theta_forms(order);
  const auto f = form_F(order);
  const auto g = form_G(th);
  CompositeForms c{
      f,
      g,
      form_K10(th),
      form_K12(th),
      form_K14(th),
      form_L(order),
      sub(mul(d_operator(f), g), mul(f, d_operator(g))),
      form_P1(order),
      form_P2(order),
      form_P3(order),
      form_P4(order),
      form_X42Delta(order),
  };
  return c;
}

}  // namespace qmf::forms
