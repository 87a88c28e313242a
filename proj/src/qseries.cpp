#include "qmf/qseries.hpp"

#include "qmf/errors.hpp"
#include "qmf/kronecker.hpp"

#include <gmp.h>

#include <algorithm>
#include <numeric>

namespace qmf {

std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

FourierSeries::FourierSeries() : grain_(1), coeffs_(1) {}

FourierSeries::FourierSeries(int grain, std::vector<Rational> coeffs)
    : grain_(grain), coeffs_(std::move(coeffs)) {
  if (grain_ < 1) throw InvalidInput("grain must be positive");
  if (coeffs_.empty()) throw InvalidInput("a series needs at least one coefficient");
}

FourierSeries FourierSeries::zero(int grain, std::size_t order) {
  return FourierSeries(grain, std::vector<Rational>(order + 1));
}

FourierSeries FourierSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return FourierSeries(1, std::move(v));
}

FourierSeries FourierSeries::generate(std::size_t order,
                                      const std::function<Rational(std::size_t)>& f) {
  std::vector<Rational> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) v[n] = f(n);
  return FourierSeries(1, std::move(v));
}

Rational FourierSeries::coefficient(const Rational& exponent) const {
  if (exponent < 0) return 0;
  if (exponent > absolute_order())
    throw OrderExceeded("exponent " + to_string(exponent) + " beyond order " +
                        to_string(absolute_order()));
  Rational idx = exponent * grain_;
  if (denominator_of(idx) != 1) return 0;
  return coeffs_[numerator_of(idx).convert_to<std::size_t>()];
}

bool FourierSeries::has_integer_exponents() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (k % static_cast<std::size_t>(grain_) != 0 && coeffs_[k] != 0) return false;
  return true;
}

bool FourierSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> FourierSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return Rational(static_cast<long>(k), grain_);
  return std::nullopt;
}

FourierSeries regrain(const FourierSeries& f, int g) {
  if (g % f.grain() != 0) throw InvalidInput("regrain target must be a multiple of the grain");
  if (g == f.grain()) return f;
  const std::size_t step = static_cast<std::size_t>(g / f.grain());
  std::vector<Rational> v(f.order() * step + 1);
  for (std::size_t k = 0; k <= f.order(); ++k) v[k * step] = f[k];
  return FourierSeries(g, std::move(v));
}

FourierSeries reduce_grain(const FourierSeries& f) {
  std::size_t g = static_cast<std::size_t>(f.grain());
  std::size_t d = g;
  for (std::size_t k = 0; k <= f.order() && d > 1; ++k)
    if (f[k] != 0) d = std::gcd(d, k);
  if (d == 1) return f;
  std::vector<Rational> v(f.order() / d + 1);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f[k * d];
  return FourierSeries(static_cast<int>(g / d), std::move(v));
}

FourierSeries truncate(const FourierSeries& f, const Rational& bound) {
  Rational idx = bound * f.grain();
  if (idx < 0) throw InvalidInput("negative truncation bound");
  std::size_t k = (numerator_of(idx) / denominator_of(idx)).convert_to<std::size_t>();
  if (k >= f.order()) return f;
  return FourierSeries(f.grain(), std::vector<Rational>(f.coeffs().begin(), f.coeffs().begin() + k + 1));
}

namespace {

int lcm_grain(const FourierSeries& f, const FourierSeries& g) {
  return std::lcm(f.grain(), g.grain());
}

// Aligned copies on the common grain truncated to the common absolute order.
std::pair<FourierSeries, FourierSeries> align(const FourierSeries& f, const FourierSeries& g) {
  const int L = lcm_grain(f, g);
  FourierSeries a = regrain(f, L), b = regrain(g, L);
  const std::size_t n = std::min(a.order(), b.order());
  auto cut = [n](const FourierSeries& s) {
    if (s.order() == n) return s;
    return FourierSeries(s.grain(), std::vector<Rational>(s.coeffs().begin(), s.coeffs().begin() + n + 1));
  };
  return {cut(a), cut(b)};
}

// Common denominator and integer numerators of the first n entries.
std::pair<Integer, std::vector<Integer>> lift(const std::vector<Rational>& c, std::size_t n) {
  Integer den = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& q = c[k].backend().data();
    if (mpz_cmp_ui(mpq_denref(q), 1) != 0)
      mpz_lcm(den.backend().data(), den.backend().data(), mpq_denref(q));
  }
  std::vector<Integer> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& q = c[k].backend().data();
    if (mpq_sgn(q) == 0) continue;
    mpz_ptr o = out[k].backend().data();
    mpz_divexact(o, den.backend().data(), mpq_denref(q));
    mpz_mul(o, o, mpq_numref(q));
  }
  return {den, std::move(out)};
}

}  // namespace

FourierSeries add(const FourierSeries& f, const FourierSeries& g) {
  auto [a, b] = align(f, g);
  std::vector<Rational> v(a.coeffs());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += b[k];
  return FourierSeries(a.grain(), std::move(v));
}

FourierSeries sub(const FourierSeries& f, const FourierSeries& g) {
  auto [a, b] = align(f, g);
  std::vector<Rational> v(a.coeffs());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= b[k];
  return FourierSeries(a.grain(), std::move(v));
}

FourierSeries scale(const Rational& c, const FourierSeries& f) {
  std::vector<Rational> v(f.coeffs());
  for (auto& x : v) x *= c;
  return FourierSeries(f.grain(), std::move(v));
}

FourierSeries mul(const FourierSeries& f, const FourierSeries& g) {
  auto [a, b] = align(f, g);
  const std::size_t n = a.order() + 1;
  auto [da, ia] = lift(a.coeffs(), n);
  std::vector<Integer> prod;
  Integer den;
  if (&f == &g) {
    prod = detail::convolve(ia, ia, n);
    den = da * da;
  } else {
    auto [db, ib] = lift(b.coeffs(), n);
    prod = detail::convolve(ia, ib, n);
    den = da * db;
  }
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < n; ++k)
    if (prod[k] != 0) v[k] = Rational(prod[k], den);
  return FourierSeries(a.grain(), std::move(v));
}

FourierSeries power(const FourierSeries& f, unsigned n) {
  std::vector<Rational> one(f.order() + 1);
  one[0] = 1;
  FourierSeries result(f.grain(), std::move(one));
  FourierSeries base = f;
  while (n > 0) {
    if (n & 1u) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

FourierSeries d_operator(const FourierSeries& f) {
  std::vector<Rational> v(f.coeffs());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    v[k] *= Rational(static_cast<long>(k), f.grain());
  }
  return FourierSeries(f.grain(), std::move(v));
}

FourierSeries d_operator(const FourierSeries& f, unsigned times) {
  FourierSeries r = f;
  for (unsigned i = 0; i < times; ++i) r = d_operator(r);
  return r;
}

FourierSeries antiderivative(const FourierSeries& f) {
  if (f[0] != 0) throw InvalidInput("antiderivative needs a zero constant term");
  std::vector<Rational> v(f.coeffs());
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] != 0) v[k] /= Rational(static_cast<long>(k), f.grain());
  return FourierSeries(f.grain(), std::move(v));
}

FourierSeries dilate(const FourierSeries& f, int n) {
  if (n < 1) throw InvalidInput("dilation factor must be positive");
  const std::size_t step = static_cast<std::size_t>(n);
  std::vector<Rational> v(f.order() * step + 1);
  for (std::size_t k = 0; k <= f.order(); ++k) v[k * step] = f[k];
  return reduce_grain(FourierSeries(f.grain(), std::move(v)));
}

FourierSeries contract(const FourierSeries& f, int n) {
  if (n < 1) throw InvalidInput("contraction factor must be positive");
  return reduce_grain(FourierSeries(f.grain() * n, f.coeffs()));
}

FourierSeries half_shift(const FourierSeries& f) {
  if (!f.has_integer_exponents())
    throw NonIntegerGrain("half_shift needs integer exponents; grain-" +
                          std::to_string(f.grain()) + " series has fractional terms");
  const std::size_t g = static_cast<std::size_t>(f.grain());
  std::vector<Rational> v(f.coeffs());
  for (std::size_t k = g; k < v.size(); k += 2 * g) v[k] = -v[k];
  return FourierSeries(f.grain(), std::move(v));
}

FourierSeries divide(const FourierSeries& f, const FourierSeries& g) {
  auto [a, b] = align(f, g);
  std::size_t v = 0;
  while (v <= b.order() && b[v] == 0) ++v;
  if (v > b.order()) throw InvalidInput("division by a series that vanishes to its order");
  for (std::size_t k = 0; k < v; ++k)
    if (a[k] != 0) throw InvalidInput("dividend has terms below the divisor's leading exponent");
  const std::size_t n = a.order() - v;
  std::vector<Rational> quot(n + 1);
  // Long division on the shifted series: a_{k+v} = sum_j quot_j b_{k-j+v}.
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = a[k + v];
    for (std::size_t j = 0; j < k; ++j)
      if (quot[j] != 0 && b[k - j + v] != 0) acc -= quot[j] * b[k - j + v];
    quot[k] = acc / b[v];
  }
  return FourierSeries(a.grain(), std::move(quot));
}

FourierSeries lambert_block(unsigned k, unsigned b, std::size_t order, bool with_m) {
  if (b == 0) throw InvalidInput("lambert_block scale must be positive");
  std::vector<Integer> acc(order + 1);
  for (std::size_t m = 1; m * b <= order; ++m) {
    for (std::size_t d = 1; d * m * b <= order; ++d) {
      Integer term = pow_integer(Integer(d), k);
      if (with_m) term *= m;
      acc[d * m * b] += term;
    }
  }
  std::vector<Rational> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) v[n] = Rational(acc[n]);
  return FourierSeries(1, std::move(v));
}

std::optional<Difference> first_difference(const FourierSeries& f, const FourierSeries& g,
                                           const std::optional<Rational>& bound) {
  auto [a, b] = align(f, g);
  std::size_t last = a.order();
  if (bound) {
    Rational idx = *bound * a.grain();
    if (idx < 0) return std::nullopt;
    last = std::min(last, (numerator_of(idx) / denominator_of(idx)).convert_to<std::size_t>());
  }
  for (std::size_t k = 0; k <= last; ++k)
    if (a[k] != b[k]) return Difference{Rational(static_cast<long>(k), a.grain()), a[k] - b[k]};
  return std::nullopt;
}

}  // namespace qmf
