#pragma once

#include "qmf/number.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace qmf {

// Truncated expansion sum_{k=0}^{K} c_k q^{k/g} with exact rational
// coefficients. The series is known up to (and including) the absolute
// exponent K/g. Values are immutable.
class FourierSeries {
 public:
  FourierSeries();
  FourierSeries(int grain, std::vector<Rational> coeffs);

  static FourierSeries zero(int grain, std::size_t order);
  static FourierSeries constant(const Rational& c, std::size_t order);
  // Integer-exponent series with c_n = f(n), 0 <= n <= order.
  static FourierSeries generate(std::size_t order, const std::function<Rational(std::size_t)>& f);

  int grain() const noexcept { return grain_; }
  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  Rational absolute_order() const { return Rational(static_cast<long>(order()), grain_); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

  // Coefficient at an absolute exponent; zero off the grain lattice.
  // Throws OrderExceeded past the truncation order.
  Rational coefficient(const Rational& exponent) const;
  Rational coefficient(long n) const { return coefficient(Rational(n)); }

  bool has_integer_exponents() const;
  bool is_zero() const;
  // Smallest exponent with a nonzero coefficient.
  std::optional<Rational> valuation() const;

 private:
  int grain_;
  std::vector<Rational> coeffs_;
};

struct Difference {
  Rational exponent;
  Rational value;  // lhs - rhs at that exponent
};

// Re-express on grain g (a multiple of the current grain) without changing the
// absolute order.
FourierSeries regrain(const FourierSeries& f, int g);
// Smallest grain dividing the current one on which f is exactly representable.
FourierSeries reduce_grain(const FourierSeries& f);
// Keep exponents <= bound.
FourierSeries truncate(const FourierSeries& f, const Rational& bound);

FourierSeries add(const FourierSeries& f, const FourierSeries& g);
FourierSeries sub(const FourierSeries& f, const FourierSeries& g);
FourierSeries scale(const Rational& c, const FourierSeries& f);
FourierSeries mul(const FourierSeries& f, const FourierSeries& g);
FourierSeries power(const FourierSeries& f, unsigned n);

// q d/dq: c_r q^r -> r c_r q^r.
FourierSeries d_operator(const FourierSeries& f);
FourierSeries d_operator(const FourierSeries& f, unsigned times);
// Inverse of d_operator on series with zero constant term.
FourierSeries antiderivative(const FourierSeries& f);

// F(Nz): q^r -> q^{Nr}.
FourierSeries dilate(const FourierSeries& f, int n);
// F(z/N): q^r -> q^{r/N}.
FourierSeries contract(const FourierSeries& f, int n);
// F(z + 1/2) for integer-exponent series.
FourierSeries half_shift(const FourierSeries& f);

// Exact quotient f/g. The lowest term of g must not exceed that of f.
FourierSeries divide(const FourierSeries& f, const FourierSeries& g);

// sum_{m,d>=1} d^k m^{[with_m]} q^{b d m} to integer order K, by direct
// double summation.
FourierSeries lambert_block(unsigned k, unsigned b, std::size_t order, bool with_m);

// First exponent <= bound where f and g differ. The bound is clipped to the
// smaller of the two truncation orders.
std::optional<Difference> first_difference(const FourierSeries& f, const FourierSeries& g,
                                           const std::optional<Rational>& bound = std::nullopt);

inline FourierSeries operator+(const FourierSeries& a, const FourierSeries& b) { return add(a, b); }
inline FourierSeries operator-(const FourierSeries& a, const FourierSeries& b) { return sub(a, b); }
inline FourierSeries operator*(const FourierSeries& a, const FourierSeries& b) { return mul(a, b); }
inline FourierSeries operator*(const Rational& c, const FourierSeries& f) { return scale(c, f); }
inline FourierSeries operator-(const FourierSeries& f) { return scale(Rational(-1), f); }

}  // namespace qmf
