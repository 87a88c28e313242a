#include "qmf/identities.hpp"

#include "qmf/errors.hpp"
#include "qmf/extremal.hpp"
#include "qmf/forms.hpp"

#include <algorithm>
#include <chrono>

namespace qmf::identities {
namespace {

using extremal::x_w1;
using extremal::x_w2;
using forms::E2;
using forms::E4;
using forms::E6;
using Eqs = std::vector<Equation>;

constexpr std::size_t kDefaultOrder = 120;
constexpr std::size_t kThetaOrder = 60;

FourierSeries D(const FourierSeries& f) { return d_operator(f); }
FourierSeries D2(const FourierSeries& f) { return d_operator(f, 2); }

// (m+1)(F')^2 - m F'' F
FourierSeries tangent_bracket(const FourierSeries& f, int m) {
  const auto df = D(f);
  return sub(scale(m + 1, mul(df, df)), scale(m, mul(D2(f), f)));
}

// sum_{m>=1} m^{[with_m]} h(q^{b m}) with h(x) = x W(x) / (1 - x)^k.
FourierSeries lambert_closed(const std::vector<long>& w, unsigned k, bool with_m, unsigned b,
                             std::size_t order) {
  std::vector<Integer> inv(order + 1);  // 1/(1-x)^k
  for (std::size_t j = 0; j <= order; ++j) {
    Integer c = 1;
    for (unsigned i = 1; i < k; ++i) c = c * (j + i) / i;
    inv[j] = c;
  }
  std::vector<Integer> h(order + 1);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; 1 + i + j <= order; ++j) h[1 + i + j] += w[i] * inv[j];
  std::vector<Integer> acc(order + 1);
  for (std::size_t m = 1; m * b <= order; ++m)
    for (std::size_t j = 1; j * m * b <= order; ++j) acc[j * m * b] += with_m ? h[j] * m : h[j];
  std::vector<Rational> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) v[n] = Rational(acc[n]);
  return FourierSeries(1, std::move(v));
}

FourierSeries constant(const Rational& c, std::size_t order) { return FourierSeries::constant(c, order); }

Eqs lcomb_equations(const std::array<Rational, 6>& a, int tilde_offset, std::size_t n) {
  const auto th = forms::theta_forms(n);
  const auto ab = mul(th.A, th.B);
  auto part = [&](int w) {
    const auto x = x_w2(w, n);
    const auto tilde = extremal::dilation_difference(x, pow_rational(2, static_cast<unsigned>(w - tilde_offset)), 2);
    return std::pair{dilate(x, 2), tilde};
  };
  const auto [x8d, x8t] = part(8);
  const auto [x10d, x10t] = part(10);
  const auto [x12d, x12t] = part(12);
  FourierSeries rhs = scale(a[0], mul(x8d, ab));
  rhs = add(rhs, scale(a[1], mul(x8t, ab)));
  rhs = add(rhs, scale(a[2], mul(x10d, th.A)));
  rhs = add(rhs, scale(a[3], mul(x10t, th.A)));
  rhs = add(rhs, scale(a[4], mul(x12d, th.B)));
  rhs = add(rhs, scale(a[5], mul(x12t, th.B)));
  return Eqs{{forms::form_L(n), rhs}};
}

std::vector<IdentityCase> build_registry() {
  std::vector<IdentityCase> r;
  auto add_case = [&r](std::string id, std::string anchor, std::size_t order,
                       std::function<Eqs(std::size_t)> f) {
    r.push_back({std::move(id), std::move(anchor), order, std::move(f)});
  };

  add_case("RAM-1", "Ramanujan: E2' = (E2^2 - E4)/12", kDefaultOrder, [](std::size_t n) {
    const auto e2 = E2(n);
    return Eqs{{D(e2), scale(Rational(1, 12), sub(mul(e2, e2), E4(n)))}};
  });
  add_case("RAM-2", "Ramanujan: E4' = (E2 E4 - E6)/3", kDefaultOrder, [](std::size_t n) {
    const auto e4 = E4(n);
    return Eqs{{D(e4), scale(Rational(1, 3), sub(mul(E2(n), e4), E6(n)))}};
  });
  add_case("RAM-3", "Ramanujan: E6' = (E2 E6 - E4^2)/2", kDefaultOrder, [](std::size_t n) {
    const auto e4 = E4(n), e6 = E6(n);
    return Eqs{{D(e6), scale(Rational(1, 2), sub(mul(E2(n), e6), mul(e4, e4)))}};
  });
  add_case("DELTA", "q prod (1 - q^n)^24 = (E4^3 - E6^2)/1728", kDefaultOrder, [](std::size_t n) {
    const auto e4 = E4(n), e6 = E6(n);
    return Eqs{{forms::delta(n), scale(Rational(1, 1728), sub(mul(mul(e4, e4), e4), mul(e6, e6)))}};
  });
  add_case("E2L2", "6 E2(z) = 4 E2(2z) + E2(z/2) + E2((z+1)/2) on q^{1/2}", kDefaultOrder,
           [](std::size_t n) {
             const auto e2 = E2(n), wide = E2(2 * n);
             auto rhs = add(scale(4, dilate(e2, 2)), contract(wide, 2));
             rhs = add(rhs, contract(half_shift(wide), 2));
             return Eqs{{regrain(scale(6, e2), 2), rhs}};
           });
  add_case("E2-HALF", "(E2(z + 1/2) - E2(z))/48 = sum sigma_1(2k+1) q^{2k+1}", kDefaultOrder,
           [](std::size_t n) {
             const auto e2 = E2(n);
             const auto s1 = forms::sigma_table(1, n);
             auto odd = FourierSeries::generate(n, [&](std::size_t k) {
               return k % 2 == 1 ? Rational(s1[k]) : Rational(0);
             });
             return Eqs{{scale(Rational(1, 48), sub(half_shift(e2), e2)), odd}};
           });

  // Lambert expansions: divisor-sum side against the closed rational blocks.
  add_case("LAMBERT-1", "1 - E2 = 24 sum q^m/(1 - q^m)^2", kDefaultOrder, [](std::size_t n) {
    return Eqs{{sub(constant(1, n), E2(n)), scale(24, lambert_closed({1}, 2, false, 1, n))}};
  });
  add_case("LAMBERT-2", "X_{4,2} = sum m q^m (1 + q^m)/(1 - q^m)^3", kDefaultOrder, [](std::size_t n) {
    return Eqs{{x_w2(4, n), lambert_closed({1, 1}, 3, true, 1, n)}};
  });
  add_case("LAMBERT-3", "E2(2z) - E2(z) = 24 sum (q^n/(1-q^n)^2 - q^{2n}/(1-q^{2n})^2)",
           kDefaultOrder, [](std::size_t n) {
             const auto e2 = E2(n);
             auto rhs = sub(lambert_closed({1}, 2, false, 1, n), lambert_closed({1}, 2, false, 2, n));
             return Eqs{{sub(dilate(e2, 2), e2), scale(24, rhs)}};
           });
  add_case("LAMBERT-4", "X_{8,1} = sum m q^m (1 + 57q^m + 302q^{2m} + 302q^{3m} + 57q^{4m} + q^{5m})/(1-q^m)^7",
           kDefaultOrder, [](std::size_t n) {
             return Eqs{{x_w1(8, n), lambert_closed({1, 57, 302, 302, 57, 1}, 7, true, 1, n)}};
           });
  add_case("LAMBERT-5", "X_{10,1} = sum m q^m (1 + 247q^m + 4293q^{2m} + 15619q^{3m} + ...)/(1-q^m)^9",
           kDefaultOrder, [](std::size_t n) {
             return Eqs{{x_w1(10, n),
                         lambert_closed({1, 247, 4293, 15619, 15619, 4293, 247, 1}, 9, true, 1, n)}};
           });
  add_case("LAMBERT-6", "X_{6,1} = sum m q^m (1 + 11q^m + 11q^{2m} + q^{3m})/(1-q^m)^5", kDefaultOrder,
           [](std::size_t n) {
             return Eqs{{x_w1(6, n), lambert_closed({1, 11, 11, 1}, 5, true, 1, n)}};
           });
  add_case("LAMBERT-7", "E4 - 1 = 240 sum q^m (1 + 4q^m + q^{2m})/(1-q^m)^4", kDefaultOrder,
           [](std::size_t n) {
             return Eqs{{sub(E4(n), constant(1, n)), scale(240, lambert_closed({1, 4, 1}, 4, false, 1, n))}};
           });

  // Weight-raising recurrences, checked on the nullspace-defined extremal forms.
  for (int w = 6; w + 6 <= 48; w += 6) {
    add_case("GRAB-" + std::to_string(w), "X_{w+2}, X_{w+4}, X_{w+6} recurrences from X_{w,1}",
             kDefaultOrder, [w](std::size_t n) {
               auto X = [n](int v) { return extremal::extremal_by_vanishing(v, 1, n); };
               const auto xw = X(w), x2 = X(w + 2), e4 = E4(n), e6 = E6(n);
               Eqs eqs;
               eqs.push_back({x2, scale(Rational(12, w + 1), forms::serre_derivative(xw, w - 1))});
               eqs.push_back({X(w + 4), mul(e4, xw)});
               eqs.push_back({X(w + 6), scale(Rational(w + 6, 864 * (w + 5)), sub(mul(e4, x2), mul(e6, xw)))});
               return eqs;
             });
  }
  for (int w = 12; w + 4 <= 48; w += 6) {
    add_case("LEE-" + std::to_string(w), "derivative recurrences for X_{w,1}, X_{w+2,1}, X_{w+4,1}",
             kDefaultOrder, [w](std::size_t n) {
               auto X = [n](int v) { return x_w1(v, n); };
               const auto x6 = X(6), x8 = X(8), x10 = X(10);
               const Rational a(5 * w, 72), b(7 * w, 72);
               Eqs eqs;
               eqs.push_back({D(X(w)), add(scale(a, mul(x6, X(w - 4))), scale(b, mul(x8, X(w - 6))))});
               eqs.push_back({D(X(w + 2)), add(scale(a, mul(x6, X(w - 2))), scale(b, mul(x8, X(w - 4))))});
               auto r3 = add(scale(240, mul(x6, X(w))), scale(b, mul(x8, X(w - 2))));
               eqs.push_back({D(X(w + 4)), add(r3, scale(a, mul(x10, X(w - 4))))});
               return eqs;
             });
  }
  for (int w : {12, 14, 16, 18, 24, 30, 36, 42, 48}) {
    add_case("AB-" + std::to_string(w), "X_{w,1} = A_w + E2 B_{w-2}", kDefaultOrder, [w](std::size_t n) {
      const auto c = extremal::x_w1_components(w, n);
      return Eqs{{x_w1(w, n), add(c.A, mul(E2(n), c.B))}};
    });
  }

  add_case("BR-61", "6(X_{6,1}')^2 - 5 X_{6,1}'' X_{6,1} = Delta X_{4,2}", kDefaultOrder, [](std::size_t n) {
    return Eqs{{tangent_bracket(x_w1(6, n), 5), mul(forms::delta(n), x_w2(4, n))}};
  });
  add_case("BR-121", "12(X_{12,1}')^2 - 11 X_{12,1}'' X_{12,1} = Delta F / (2^10 3^6 5^2 7^2)",
           kDefaultOrder, [](std::size_t n) {
             const Rational c(1, 1024 * 729 * 25 * 49);
             return Eqs{{tangent_bracket(x_w1(12, n), 11), scale(c, mul(forms::delta(n), forms::form_F(n)))}};
           });
  add_case("BR-141", "14(X_{14,1}')^2 - 13 X_{14,1}'' X_{14,1} = 4 Delta^2 X_{8,2}", kDefaultOrder,
           [](std::size_t n) {
             const auto d = forms::delta(n);
             return Eqs{{tangent_bracket(x_w1(14, n), 13), scale(4, mul(mul(d, d), x_w2(8, n)))}};
           });
  // -(1/(m+1)) Phi_{2;m+1,1;m+1,1}(F, F) recovers the tangent bracket; s = 0 gives the plain closed form.
  add_case("MRB-5", "-(1/6) Phi_{2;6,1;6,1}(X_{6,1}, X_{6,1}) = Delta X_{4,2}", kDefaultOrder,
           [](std::size_t n) {
             const auto f = x_w1(6, n);
             const auto df = D(f);
             return Eqs{{scale(Rational(-1, 6), forms::martin_royer_bracket(f, f, 2, 6, 1, 6, 1)),
                         mul(forms::delta(n), x_w2(4, n))},
                        {forms::martin_royer_bracket(f, f, 2, 5, 0, 5, 0),
                         sub(scale(30, mul(D2(f), f)), scale(36, mul(df, df)))}};
           });
  add_case("MRB-11", "-(1/12) Phi_{2;12,1;12,1}(X_{12,1}, X_{12,1}) = Delta F / (2^10 3^6 5^2 7^2)",
           kDefaultOrder, [](std::size_t n) {
             const auto f = x_w1(12, n);
             const auto df = D(f);
             const Rational c(1, 1024 * 729 * 25 * 49);
             return Eqs{{scale(Rational(-1, 12), forms::martin_royer_bracket(f, f, 2, 12, 1, 12, 1)),
                         scale(c, mul(forms::delta(n), forms::form_F(n)))},
                        {forms::martin_royer_bracket(f, f, 2, 11, 0, 11, 0),
                         sub(scale(132, mul(D2(f), f)), scale(144, mul(df, df)))}};
           });

  add_case("D2-DERIV-1", "X_{10,2}' = (8/9) X_{4,2} X_{8,1} + (10/9) X_{6,1}^2", kDefaultOrder,
           [](std::size_t n) {
             const auto x6 = x_w1(6, n);
             return Eqs{{D(x_w2(10, n)), add(scale(Rational(8, 9), mul(x_w2(4, n), x_w1(8, n))),
                                            scale(Rational(10, 9), mul(x6, x6)))}};
           });
  add_case("D2-DERIV-2", "X_{12,2}' = 3 X_{6,1} X_{8,2}", kDefaultOrder, [](std::size_t n) {
    return Eqs{{D(x_w2(12, n)), scale(3, mul(x_w1(6, n), x_w2(8, n)))}};
  });
  add_case("D2-DERIV-3", "X_{8,2}' = 2 X_{4,2} X_{6,1}", kDefaultOrder, [](std::size_t n) {
    return Eqs{{D(x_w2(8, n)), scale(2, mul(x_w2(4, n), x_w1(6, n)))}};
  });
  add_case("D2-DERIV-4", "X_{14,2}' = 3 X_{4,2} X_{12,1}, with X_{14,2} from its vanishing order",
           kDefaultOrder, [](std::size_t n) {
             return Eqs{{D(extremal::extremal_by_vanishing(14, 2, n)), scale(3, mul(x_w2(4, n), x_w1(12, n)))}};
           });
  add_case("X121-DERIV", "X_{12,1}' = 2 X_{6,1} X_{8,1}", kDefaultOrder, [](std::size_t n) {
    return Eqs{{D(x_w1(12, n)), scale(2, mul(x_w1(6, n), x_w1(8, n)))}};
  });
  add_case("E1-A", "-12 E2 E4 E6 + 5 E4^3 + 7 E6^2 = 3991680 X_{12,1}", kDefaultOrder, [](std::size_t n) {
    const auto e2 = E2(n), e4 = E4(n), e6 = E6(n);
    auto lhs = add(scale(-12, mul(e2, mul(e4, e6))), scale(5, mul(e4, mul(e4, e4))));
    lhs = add(lhs, scale(7, mul(e6, e6)));
    return Eqs{{lhs, scale(3991680, x_w1(12, n))}};
  });
  add_case("E1-B", "(11/3991680)(-E2^2 E4 E6 + E2 E4^3 + E2 E6^2 - E4^2 E6) = X_{12,1}'", kDefaultOrder,
           [](std::size_t n) {
             const auto e2 = E2(n), e4 = E4(n), e6 = E6(n);
             const auto e4e4 = mul(e4, e4);
             auto p = scale(-1, mul(mul(e2, e2), mul(e4, e6)));
             p = add(p, mul(e2, mul(e4e4, e4)));
             p = add(p, mul(e2, mul(e6, e6)));
             p = sub(p, mul(e4e4, e6));
             return Eqs{{scale(Rational(11, 3991680), p), D(x_w1(12, n))}};
           });
  add_case("X42D", "X_{4,2} Delta = (E4 Delta - Delta'')/312", kDefaultOrder, [](std::size_t n) {
    const auto d = forms::delta(n);
    return Eqs{{forms::form_X42Delta(n), scale(Rational(1, 312), sub(mul(E4(n), d), D2(d)))}};
  });
  add_case("XW2-COEFF-8", "X_{8,2} = sum (n sigma_5(n) - n^2 sigma_3(n))/30 q^n", kDefaultOrder,
           [](std::size_t n) {
             const auto s3 = forms::sigma_table(3, n), s5 = forms::sigma_table(5, n);
             auto rhs = FourierSeries::generate(n, [&](std::size_t k) {
               const Integer K(k);
               return Rational(K * s5[k] - K * K * s3[k], 30);
             });
             return Eqs{{x_w2(8, n), rhs}};
           });
  add_case("XW2-COEFF-10", "X_{10,2} = sum (n sigma_7(n) - n^2 sigma_5(n))/126 q^n", kDefaultOrder,
           [](std::size_t n) {
             const auto s5 = forms::sigma_table(5, n), s7 = forms::sigma_table(7, n);
             auto rhs = FourierSeries::generate(n, [&](std::size_t k) {
               const Integer K(k);
               return Rational(K * s7[k] - K * K * s5[k], 126);
             });
             return Eqs{{x_w2(10, n), rhs}};
           });
  add_case("XW2-EXTREMAL", "explicit X_{8,2}, X_{10,2}, X_{12,2} are the extremal depth-2 forms",
           kDefaultOrder, [](std::size_t n) {
             Eqs eqs;
             for (int w : {8, 10, 12}) eqs.push_back({x_w2(w, n), extremal::extremal_by_vanishing(w, 2, n)});
             return eqs;
           });

  add_case("SERRE-CROSS", "F'G - FG' = (d_14 F) G - F (d_14 G)", kThetaOrder, [](std::size_t n) {
    const auto th = forms::theta_forms(n);
    const auto f = forms::form_F(n), g = forms::form_G(th);
    auto lhs = sub(mul(D(f), g), mul(f, D(g)));
    auto rhs = sub(mul(forms::serre_derivative(f, 14), g), mul(f, forms::serre_derivative(g, 14)));
    return Eqs{{lhs, rhs}};
  });
  add_case("LFACT", "F'G - FG' = (105/8) H2^5 H4^2 (H2 + H4)^2 L", kThetaOrder, [](std::size_t n) {
    const auto th = forms::theta_forms(n);
    const auto h24 = add(th.H2, th.H4);
    auto rhs = mul(power(th.H2, 5), power(th.H4, 2));
    rhs = mul(rhs, mul(h24, h24));
    return Eqs{{forms::form_script_L10(n), scale(Rational(105, 8), mul(rhs, forms::form_L(n)))}};
  });
  add_case("LFACT-DIV", "(F'G - FG') / (H2^5 H4^2 (H2 + H4)^2) = (105/8) L exactly", kThetaOrder,
           [](std::size_t n) {
             const auto th = forms::theta_forms(n);
             const auto h24 = add(th.H2, th.H4);
             auto div = mul(mul(power(th.H2, 5), power(th.H4, 2)), mul(h24, h24));
             return Eqs{{divide(forms::form_script_L10(n), div), scale(Rational(105, 8), forms::form_L(n))}};
           });

  add_case("LCOMB-A", "L = a_1 X82(2z)AB + a_2 Xt82 AB + a_3 X102(2z)A + a_4 Xt102 A + a_5 X122(2z)B + a_6 Xt122 B",
           kDefaultOrder, [](std::size_t n) {
             return lcomb_equations({78278400, 550800, 90823680, 116640, 678813696000LL, 331776000}, 1, n);
           });
  add_case("LCOMB-APRIME", "L as the same combination over the Y_{w,2} family with a' coefficients",
           kDefaultOrder, [](std::size_t n) {
             return lcomb_equations({43027200, 550800, 60963840, 116640, 339075072000LL, 331776000}, 2, n);
           });

  std::sort(r.begin(), r.end(), [](const IdentityCase& a, const IdentityCase& b) { return a.id < b.id; });
  return r;
}

IdentityResult evaluate(const std::string& id, const std::string& anchor, std::size_t order,
                        const std::function<Eqs(std::size_t)>& build) {
  const auto start = std::chrono::steady_clock::now();
  IdentityResult res;
  res.id = id;
  res.anchor = anchor;
  res.order_checked = Rational(static_cast<long>(order));
  res.passed = true;
  const Eqs eqs = build(order);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const auto& e = eqs[i];
    const Rational reach = std::min({res.order_checked, e.lhs.absolute_order(), e.rhs.absolute_order()});
    res.order_checked = reach;
    if (auto d = first_difference(e.lhs, e.rhs, reach)) {
      res.passed = false;
      res.failure = d;
      res.failing_equation = i;
      break;
    }
  }
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> r = build_registry();
  return r;
}

const IdentityCase& find(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw UnknownIdentity("no identity named '" + id + "'");
}

IdentityResult verify(const IdentityCase& c, std::optional<std::size_t> order) {
  return evaluate(c.id, c.anchor, order.value_or(c.default_order), c.build);
}

IdentityResult verify(const std::string& id, std::optional<std::size_t> order) {
  return verify(find(id), order);
}

std::vector<IdentityResult> verify_all(std::optional<std::size_t> order,
                                       const std::function<bool(const std::string&)>& filter) {
  std::vector<IdentityResult> out;
  for (const auto& c : registry()) {
    if (filter && !filter(c.id)) continue;
    const std::size_t n = order ? std::min(*order, c.default_order) : c.default_order;
    out.push_back(verify(c, n));
  }
  return out;
}

IdentityResult verify_lcomb(const std::array<Rational, 6>& a, int tilde_offset, std::size_t order,
                            const std::string& id) {
  auto build = [a, tilde_offset](std::size_t n) { return lcomb_equations(a, tilde_offset, n); };
  return evaluate(id, "L as a positive combination of level-2 extremal forms", order, build);
}

}  // namespace qmf::identities
