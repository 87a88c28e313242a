#include "qmf/positivity.hpp"

#include "qmf/catalog.hpp"
#include "qmf/errors.hpp"
#include "qmf/extremal.hpp"
#include "qmf/forms.hpp"

#include <boost/multiprecision/integer.hpp>

namespace qmf::positivity {
namespace {

// 11586/8192 >= sqrt(2).
const Rational kSqrt2Upper(11586, 8192);

// Upper bound for 2^{a/2}.
Rational half_power_of_two_upper(long a) {
  const Rational whole = pow_rational(2, static_cast<unsigned>(a / 2));
  return a % 2 == 0 ? whole : whole * kSqrt2Upper;
}

// Upper bound for sqrt(m).
Integer sqrt_upper(long m) {
  const Integer r = boost::multiprecision::sqrt(Integer(m));
  return r * r == m ? r : r + 1;
}

FourierSeries integer_grain(const FourierSeries& f) {
  auto g = reduce_grain(f);
  if (g.grain() != 1) throw NonIntegerGrain("sign counts need integer exponents");
  return g;
}

}  // namespace

PositivityReport check_complete_positivity(const std::string& label, const FourierSeries& f) {
  PositivityReport r;
  r.label = label;
  r.order = f.absolute_order();
  for (std::size_t k = 0; k <= f.order(); ++k)
    if (f[k] < 0) {
      r.first_negative = SignedCoefficient{Rational(static_cast<long>(k), f.grain()), f[k]};
      break;
    }
  r.completely_positive = !r.first_negative;
  return r;
}

PositivityReport check_complete_positivity(const std::string& label, std::size_t order) {
  return check_complete_positivity(label, lookup_form(label).build(order));
}

std::optional<Rational> predicted_density(const std::string& label) {
  if (label == "P1" || label == "P3" || label == "P4" || label == "X42Delta") return Rational(1, 2);
  if (label == "P2") return Rational(3, 4);
  return std::nullopt;
}

DensityReport sign_pattern(const std::string& label, const FourierSeries& f, std::size_t N) {
  const auto g = integer_grain(f);
  if (N > g.order()) throw OrderExceeded("density range beyond the series order");
  DensityReport r;
  r.label = label;
  r.N = N;
  for (std::size_t n = 1; n <= N; ++n)
    if (g[n] > 0) ++r.count_positive;
  r.density = N == 0 ? Rational(0) : Rational(static_cast<long>(r.count_positive), static_cast<long>(N));
  r.predicted = predicted_density(label);
  return r;
}

DensityReport sign_pattern(const std::string& label, std::size_t N) {
  return sign_pattern(label, lookup_form(label).build(N), N);
}

std::optional<std::function<int(std::size_t)>> stated_sign_rule(const std::string& label) {
  if (label == "P1" || label == "P3") return [](std::size_t n) { return n % 2 == 1 ? 1 : -1; };
  if (label == "P2") return [](std::size_t n) { return n % 4 == 2 ? -1 : 1; };
  // X_{12,1} starts at q^2, so a_1 = 1 - tau(1) = 0.
  if (label == "P4")
    return [](std::size_t n) { return n == 1 ? 0 : (n % 2 == 1 || n == 2 ? 1 : -1); };
  return std::nullopt;
}

std::optional<SignedCoefficient> first_sign_mismatch(const FourierSeries& f,
                                                    const std::function<int(std::size_t)>& rule,
                                                    std::size_t N) {
  const auto g = integer_grain(f);
  if (N > g.order()) throw OrderExceeded("sign range beyond the series order");
  for (std::size_t n = 1; n <= N; ++n) {
    const int s = g[n] > 0 ? 1 : (g[n] < 0 ? -1 : 0);
    if (s != rule(n)) return SignedCoefficient{Rational(static_cast<long>(n)), g[n]};
  }
  return std::nullopt;
}

RatioReport ratio_infimum(const FourierSeries& f, std::size_t n_dilate, std::size_t bound) {
  if (n_dilate == 0) throw ParameterRange("dilation must be positive");
  const auto g = integer_grain(f);
  if (n_dilate * bound > g.order()) throw OrderExceeded("ratio range beyond the series order");
  RatioReport r;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (g[n] <= 0) {
      r.violations.push_back(n);
      continue;
    }
    const Rational q = g[n_dilate * n] / g[n];
    if (!r.min_ratio || q < *r.min_ratio) {
      r.min_ratio = q;
      r.argmin = n;
    }
  }
  return r;
}

Rational doubling_ineq1_lower(long m) {
  if (m < 1) throw ParameterRange("m must be positive");
  const Integer M(m);
  const Rational m5 = Rational(pow_integer(M, 5));
  const Rational sub = Rational(18224, 21) * Rational(forms::sigma(0, static_cast<std::uint64_t>(m))) * m5 *
                       Rational(sqrt_upper(m));
  return Rational(2520, 3) * Rational(pow_integer(M, 9)) - sub + Rational(12, 7) * Rational(pow_integer(M, 10));
}

Rational doubling_ineq2_lower(long k) {
  if (k < 0) throw ParameterRange("k must be nonnegative");
  const Rational K(k);
  const Rational main = Rational(2560, 3) * pow_rational(2, static_cast<unsigned>(9 * k)) -
                        Rational(40, 3) * pow_rational(2, static_cast<unsigned>(2 * k));
  // Expand the bracket so every irrational factor is a single half-power of two.
  Rational bracket = K * half_power_of_two_upper(11 + 11 * k);
  bracket += 1048 * K * half_power_of_two_upper(11 * k);
  bracket += half_power_of_two_upper(13 + 11 * k);
  bracket += 1048 * half_power_of_two_upper(11 * k);
  return main - Rational(17, 21) * bracket;
}

DoublingReport x122_doubling_check(std::size_t bound, unsigned exponent) {
  DoublingReport r;
  const auto c = extremal::x_w2(12, 2 * bound);
  const Rational factor = pow_rational(2, exponent);
  r.ok = true;
  for (std::size_t n = 2; n <= bound; ++n)
    if (c[2 * n] < factor * c[n]) {
      r.ok = false;
      r.witness = n;
      break;
    }
  r.ineq1_ok = true;
  for (long m = 3; m <= 99; m += 2)
    if (doubling_ineq1_lower(m) <= 0) r.ineq1_ok = false;
  r.ineq2_ok = true;
  for (long k = 1; k <= 50; ++k)
    if (doubling_ineq2_lower(k) <= 0) r.ineq2_ok = false;
  return r;
}

}  // namespace qmf::positivity
