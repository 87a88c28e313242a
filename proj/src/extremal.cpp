#include "qmf/extremal.hpp"

#include "qmf/errors.hpp"
#include "qmf/forms.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qmf::extremal {
namespace {

using forms::E2;
using forms::E4;
using forms::E6;

void require_depth1_weight(int w) {
  if (w < 6 || w % 2 != 0)
    throw BadWeight("depth-1 extremal forms need even weight >= 6, got " + std::to_string(w));
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

struct Generators {
  FourierSeries e2, e4, e6;
  explicit Generators(std::size_t order) : e2(E2(order)), e4(E4(order)), e6(E6(order)) {}
};

FourierSeries x6(const Generators& g) {
  return scale(Rational(1, 720), sub(mul(g.e2, g.e4), g.e6));
}
FourierSeries x8(const Generators& g) {
  return scale(Rational(1, 1008), sub(mul(g.e4, g.e4), mul(g.e2, g.e6)));
}

}  // namespace

FourierSeries x_w1(int w, std::size_t order) {
  require_depth1_weight(w);
  const Generators g(order);
  std::map<int, FourierSeries> memo;
  std::function<const FourierSeries&(int)> get = [&](int v) -> const FourierSeries& {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    FourierSeries r;
    if (v == 6) {
      r = x6(g);
    } else if (v % 6 == 2) {
      r = scale(Rational(12, v - 1), forms::serre_derivative(get(v - 2), v - 3));
    } else if (v % 6 == 4) {
      r = mul(g.e4, get(v - 4));
    } else {
      const Rational c(v, 864 * (v - 1));
      r = scale(c, sub(mul(g.e4, get(v - 4)), mul(g.e6, get(v - 6))));
    }
    return memo.emplace(v, std::move(r)).first->second;
  };
  return get(w);
}

FourierSeries x_w1_by_derivative(int w, std::size_t order) {
  require_depth1_weight(w);
  const Generators g(order);
  std::map<int, FourierSeries> memo;
  memo.emplace(6, x6(g));
  memo.emplace(8, x8(g));
  memo.emplace(10, scale(Rational(1, 720), sub(mul(g.e2, mul(g.e4, g.e4)), mul(g.e4, g.e6))));
  std::function<const FourierSeries&(int)> get = [&](int v) -> const FourierSeries& {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    const auto& X6 = memo.at(6);
    const auto& X8 = memo.at(8);
    FourierSeries d;
    if (v % 6 == 0) {
      d = add(scale(Rational(5 * v, 72), mul(X6, get(v - 4))),
              scale(Rational(7 * v, 72), mul(X8, get(v - 6))));
    } else if (v % 6 == 2) {
      const int b = v - 2;
      d = add(scale(Rational(5 * b, 72), mul(X6, get(b - 2))),
              scale(Rational(7 * b, 72), mul(X8, get(b - 4))));
    } else {
      const int b = v - 4;
      const auto& X10 = memo.at(10);
      d = scale(240, mul(X6, get(b)));
      d = add(d, scale(Rational(7 * b, 72), mul(X8, get(b - 2))));
      d = add(d, scale(Rational(5 * b, 72), mul(X10, get(b - 4))));
    }
    return memo.emplace(v, antiderivative(d)).first->second;
  };
  return get(w);
}

FourierSeries extremal_by_vanishing(int w, int s, std::size_t order) {
  if (w < 2 || w % 2 != 0 || s < 0) throw BadWeight("need even weight and depth >= 0");
  const Generators g(order);
  std::vector<FourierSeries> p2{power(g.e2, 0)}, p4{power(g.e4, 0)}, p6{power(g.e6, 0)};
  auto pw = [](std::vector<FourierSeries>& cache, const FourierSeries& base, int e) {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(mul(cache.back(), base));
    return cache[e];
  };
  std::vector<FourierSeries> basis;
  for (int j = 0; j <= s; ++j) {
    const int k = w - 2 * j;
    if (k < 0) break;
    for (int a = 0; 4 * a <= k; ++a) {
      if ((k - 4 * a) % 6 != 0) continue;
      const int b = (k - 4 * a) / 6;
      basis.push_back(mul(pw(p2, g.e2, j), mul(pw(p4, g.e4, a), pw(p6, g.e6, b))));
    }
  }
  const std::size_t d = basis.size();
  if (d == 0) throw BadWeight("no quasimodular forms of weight " + std::to_string(w));
  if (order + 1 < d) throw OrderExceeded("order too small for the vanishing conditions");

  // Rows: coefficients of q^0..q^{d-2}; reduce to row echelon form.
  std::vector<std::vector<Rational>> m(d - 1, std::vector<Rational>(d));
  for (std::size_t r = 0; r + 1 < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m[r][c] = basis[c][r];
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < d && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < d; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  if (pivot_col.size() + 1 != d)
    throw InvalidInput("extremal form of weight " + std::to_string(w) + " is not unique");
  std::size_t free_col = 0;
  for (std::size_t c = 0; c < d; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) == pivot_col.end())
      free_col = c;
  std::vector<Rational> v(d);
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free_col];

  FourierSeries f = scale(0, basis[0]);
  for (std::size_t c = 0; c < d; ++c)
    if (v[c] != 0) f = add(f, scale(v[c], basis[c]));
  const Rational lead = f[d - 1];
  if (lead == 0) throw InvalidInput("extremal combination vanishes to higher order than expected");
  return scale(1 / lead, f);
}

Depth1Components x_w1_components(int w, std::size_t order) {
  require_depth1_weight(w);
  const Generators g(order);
  using Pair = std::pair<FourierSeries, FourierSeries>;
  std::map<int, Pair> memo;
  memo.emplace(6, Pair{scale(Rational(-1, 720), g.e6), scale(Rational(1, 720), g.e4)});
  const auto e4e4 = mul(g.e4, g.e4);
  const auto e4e6 = mul(g.e4, g.e6);
  memo.emplace(8, Pair{scale(Rational(1, 1008), e4e4), scale(Rational(-1, 1008), g.e6)});
  memo.emplace(10, Pair{scale(Rational(-1, 720), e4e6), scale(Rational(1, 720), e4e4)});
  memo.emplace(12, Pair{scale(Rational(1, 3991680),
                              add(scale(5, mul(e4e4, g.e4)), scale(7, mul(g.e6, g.e6)))),
                        scale(Rational(-1, 332640), e4e6)});
  std::function<const Pair&(int)> get = [&](int v) -> const Pair& {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    Pair r;
    if (v % 6 == 2) {
      const int b = v - 2;
      const auto& [A, B] = get(b);
      const Rational c(12, b + 1);
      r.first = scale(c, sub(forms::serre_derivative(A, b), scale(Rational(1, 12), mul(g.e4, B))));
      r.second = scale(c, add(scale(Rational(1, 12), A), forms::serre_derivative(B, b - 2)));
    } else if (v % 6 == 4) {
      const auto& [A, B] = get(v - 4);
      r = Pair{mul(g.e4, A), mul(g.e4, B)};
    } else {
      const Rational c(v, 864 * (v - 1));
      const auto& [A4, B4] = get(v - 4);
      const auto& [A6, B6] = get(v - 6);
      r.first = scale(c, sub(mul(g.e4, A4), mul(g.e6, A6)));
      r.second = scale(c, sub(mul(g.e4, B4), mul(g.e6, B6)));
    }
    return memo.emplace(v, std::move(r)).first->second;
  };
  const auto& [A, B] = get(w);
  return {w, A, B};
}

Rational alpha_w0_closed(int w) {
  if (w < 6 || w % 6 != 0) throw BadWeight("closed form needs 6 | w");
  Rational r(factorial(w / 6) * factorial(w / 3) * factorial(w / 2), 2 * w * factorial(w));
  return (w / 6) % 2 == 1 ? Rational(-r) : r;
}

Rational alpha_w0_recurrence(int w) {
  require_depth1_weight(w);
  Rational a(-1, 720);
  int v = 6;
  for (; v + 6 <= w; v += 6) a *= Rational(-v * (v + 6), 432 * (v + 1) * (v + 5));
  if (w - v == 2) a *= Rational(-(v - 1), v + 1);
  // alpha_{v+4,0} = alpha_{v,0}
  return a;
}

FourierSeries x_w2(int w, std::size_t order) {
  switch (w) {
    case 4:
      return scale(Rational(-1, 24), d_operator(E2(order)));
    case 8:
      return sub(scale(Rational(-1, 15120), d_operator(E6(order))),
                 scale(Rational(1, 7200), d_operator(E4(order), 2)));
    case 10:
      return add(scale(Rational(1, 60480), d_operator(forms::eisenstein(forms::Eisenstein::E8, order))),
                 scale(Rational(1, 63504), d_operator(E6(order), 2)));
    case 12: {
      FourierSeries r = scale(Rational(17, 21), forms::delta(order));
      r = sub(r, scale(Rational(1, 308), d_operator(forms::eisenstein(forms::Eisenstein::E10, order))));
      r = sub(r, scale(Rational(1, 288), d_operator(forms::eisenstein(forms::Eisenstein::E8, order), 2)));
      return scale(Rational(1, 18000), r);
    }
    case 14:
      return antiderivative(scale(3, mul(x_w2(4, order), x_w1(12, order))));
    default:
      throw BadWeight("explicit X_{w,2} is available for w in {4, 8, 10, 12, 14}, got " +
                      std::to_string(w));
  }
}

FourierSeries x_w2_any(int w, std::size_t order) {
  if (w == 4 || w == 8 || w == 10 || w == 12 || w == 14) return x_w2(w, order);
  return extremal_by_vanishing(w, 2, order);
}

FourierSeries dilation_difference(const FourierSeries& f, const Rational& c, int n) {
  return sub(f, scale(c, dilate(f, n)));
}

Level2Families level2_families(int w, std::size_t order, int n) {
  if (w < 4 || w % 2 != 0) throw BadWeight("level-2 families need even weight >= 4");
  if (n < 2) throw ParameterRange("dilation factor must be at least 2");
  Level2Families out;
  const auto x2 = x_w2_any(w, order);
  out.Xtilde_w2 = dilation_difference(x2, pow_rational(2, static_cast<unsigned>(w - 1)), 2);
  out.Y_w2 = dilation_difference(x2, pow_rational(2, static_cast<unsigned>(w - 2)), 2);
  if (w >= 6)
    out.Y_w1_style = dilation_difference(
        x_w1(w, order), pow_rational(n, static_cast<unsigned>(a_w_exponent(w))), n);
  return out;
}

int a_w_exponent(int w) {
  require_depth1_weight(w);
  return w - (w + 5) / 6;
}

}  // namespace qmf::extremal
