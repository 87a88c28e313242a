#include "qmf/polynomial.hpp"

#include "qmf/errors.hpp"

#include <algorithm>

namespace qmf {

Polynomial::Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Integer Polynomial::at_one() const {
  Integer s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Integer(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Integer& c, const Polynomial& a) {
  std::vector<Integer> v = a.coeffs();
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> v(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) v[i - 1] = p.coeffs()[i] * i;
  return Polynomial(std::move(v));
}

Polynomial power(const Polynomial& p, unsigned n) {
  Polynomial r({1});
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

Polynomial shift_by_one(const Polynomial& p) {
  // Horner in u: p(1+u) = (...(c_d (1+u) + c_{d-1})(1+u) + ...).
  const Polynomial one_plus_u({1, 1});
  Polynomial r;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * one_plus_u + Polynomial({*it});
  return r;
}

Polynomial reversed(const Polynomial& p, std::size_t d) {
  if (p.degree() > static_cast<long>(d)) throw InvalidInput("reversal degree below polynomial degree");
  std::vector<Integer> v(d + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[d - i] = p.coeffs()[i];
  return Polynomial(std::move(v));
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    const Integer a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1 || i == 0) out += a.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace qmf
