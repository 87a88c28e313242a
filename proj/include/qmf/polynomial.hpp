#pragma once

#include "qmf/number.hpp"

#include <string>
#include <vector>

namespace qmf {

// Dense integer polynomial, coefficient i multiplies x^i. Kept trimmed: no
// trailing zeros, the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  static Polynomial monomial(const Integer& c, std::size_t k);

  const std::vector<Integer>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  Integer at_one() const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  std::vector<Integer> c_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Integer& c, const Polynomial& a);
Polynomial derivative(const Polynomial& p);
Polynomial power(const Polynomial& p, unsigned n);
// p(1 + u) as a polynomial in u.
Polynomial shift_by_one(const Polynomial& p);
// x^d p(1/x); requires d >= degree.
Polynomial reversed(const Polynomial& p, std::size_t d);
// Human-readable form, highest degree first.
std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace qmf
