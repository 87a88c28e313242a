#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace qmf {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational pow_rational(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

inline Integer pow_integer(const Integer& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

// "p/q", or "p" for integers.
std::string to_string(const Rational& r);

}  // namespace qmf
