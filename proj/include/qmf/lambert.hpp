#pragma once

#include "qmf/polynomial.hpp"
#include "qmf/real.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmf::lambert {

enum class Method { RShift, Taylor, Auto };
std::string to_string(Method m);
Method method_from_string(const std::string& s);  // throws InvalidInput

// Why a method failed. kind is one of
//   "P_coefficient"       P has a negative coefficient (index = power of x)
//   "shifted_coefficient" R(1+u) has a negative coefficient (index = power of u)
//   "c_n"                 a Taylor coefficient is negative (index = n)
//   "linear_form"         n a_k - k Q_k stays negative for all large n (index = k)
struct Witness {
  Method method;
  std::string kind;
  long index;
  Integer value;
};

// d/dt of t^m S(e^-t)/T(e^-t) is a positive multiple of -(t P(e^t) - Q(e^t)),
// so the function decreases on t > 0 iff f(t) = t P(e^t) - Q(e^t) > 0 there.
struct MonotonicityCertificate {
  std::string name;
  Rational m;
  Polynomial P, Q;
  Method method = Method::Auto;  // the method that succeeded, or the last one tried
  Polynomial R;                  // R-shift data
  std::vector<Integer> c;        // Taylor data c_0 .. c_{n_star - 1}
  long n_star = 0;
  bool valid = false;
  std::vector<Witness> witnesses;  // one per failed method
};

// W_k with sum_{d>=1} d^k x^d = x W_k(x)/(1 - x)^{k+1}.
Polynomial eulerian_numerator(unsigned k);

struct Numerator {
  Polynomial P, Q;
};
// P, Q for g(t) = t^m S(e^-t)/T(e^-t) with T = (1 - x^b)^k. Throws
// UnsupportedShape for any other T.
Numerator derivative_numerator(const Rational& m, const Polynomial& S, const Polynomial& T);

// R(x) = P^2 - x(Q'P - QP').
Polynomial r_polynomial(const Polynomial& P, const Polynomial& Q);
// c_n = sum_k (n a_k - k Q_k) k^{n-1} with a = P.
Integer taylor_coefficient(const Polynomial& P, const Polynomial& Q, unsigned n);

// Throws InvalidInput unless Q(1) = 0. Auto tries R-shift then Taylor.
MonotonicityCertificate certify(const Polynomial& P, const Polynomial& Q, Method method = Method::Auto,
                                const Rational& m = 0);

struct LemmaData {
  std::string name;
  std::string description;
  Rational m;
  Polynomial S, T;
  bool expected_monotone;
};
const std::vector<std::string>& lemma_names();  // E2 X42 D2 X81 X101 E4m1 X61
LemmaData lemma_data(const std::string& name);   // throws UnknownLabel
MonotonicityCertificate certify_lemma(const std::string& name, Method method = Method::Auto);

// Re-derives every claim of a certificate from P, Q alone.
bool recheck(const MonotonicityCertificate& cert);

// t P(e^t) - Q(e^t) at the current default precision.
Real numerator_value(const Polynomial& P, const Polynomial& Q, const Real& t);

}  // namespace qmf::lambert
