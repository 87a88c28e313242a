#include "qmf/lambert.hpp"

#include "qmf/errors.hpp"

#include <algorithm>

namespace qmf::lambert {

std::string to_string(Method m) {
  switch (m) {
    case Method::RShift: return "R-shift";
    case Method::Taylor: return "Taylor";
    case Method::Auto: return "auto";
  }
  return "auto";
}

Method method_from_string(const std::string& s) {
  if (s == "R-shift") return Method::RShift;
  if (s == "Taylor") return Method::Taylor;
  if (s == "auto") return Method::Auto;
  throw InvalidInput("unknown certificate method '" + s + "'");
}

Polynomial eulerian_numerator(unsigned k) {
  if (k == 0) throw InvalidInput("Eulerian numerator needs k >= 1");
  // Row n holds A(n, 0..n-1) with A(n, j) = (j+1) A(n-1, j) + (n-j) A(n-1, j-1).
  std::vector<Integer> row{1};
  for (unsigned n = 2; n <= k; ++n) {
    std::vector<Integer> next(n);
    for (unsigned j = 0; j < n; ++j) {
      if (j < row.size()) next[j] += (j + 1) * row[j];
      if (j >= 1) next[j] += (n - j) * row[j - 1];
    }
    row = std::move(next);
  }
  return Polynomial(row);
}

Numerator derivative_numerator(const Rational& m, const Polynomial& S, const Polynomial& T) {
  if (m <= 0) throw InvalidInput("exponent m must be positive");
  if (T.is_zero() || T[0] != 1 || T.degree() < 1)
    throw UnsupportedShape("denominator must be (1 - x^b)^k");
  std::size_t b = 1;
  while (T[b] == 0) ++b;
  const Integer neg_k = T[b];  // (1 - x^b)^k = 1 - k x^b + ...
  if (neg_k >= 0) throw UnsupportedShape("denominator must be (1 - x^b)^k");
  const Integer k = -neg_k;
  const Polynomial base = Polynomial({1}) - Polynomial::monomial(1, b);
  if (!(power(base, k.convert_to<unsigned>()) == T)) throw UnsupportedShape("denominator must be (1 - x^b)^k");

  // With x = e^-t, g' = -t^{m-1}(1 - x^b)^{-k-1} (t p(x) - q(x)) where
  //   p = x (S'(1 - x^b) + k b x^{b-1} S),  q = m S (1 - x^b).
  const Integer den = denominator_of(m), num = numerator_of(m);
  const Polynomial x = Polynomial::monomial(1, 1);
  const Polynomial p =
      den * (x * (derivative(S) * base + (k * b) * (Polynomial::monomial(1, b - 1) * S)));
  const Polynomial q = num * (S * base);
  const std::size_t d = static_cast<std::size_t>(std::max(p.degree(), q.degree()));
  // Multiply by e^{dt} to get polynomials in e^t, then drop a common power of e^t.
  Polynomial P = reversed(p, d), Q = reversed(q, d);
  std::size_t low = 0;
  while (P[low] == 0 && Q[low] == 0) ++low;
  if (low > 0) {
    auto strip = [low](const Polynomial& f) {
      return Polynomial(std::vector<Integer>(f.coeffs().begin() + std::min(low, f.coeffs().size()),
                                             f.coeffs().end()));
    };
    P = strip(P);
    Q = strip(Q);
  }
  return {P, Q};
}

Polynomial r_polynomial(const Polynomial& P, const Polynomial& Q) {
  const Polynomial x = Polynomial::monomial(1, 1);
  return P * P - x * (derivative(Q) * P - Q * derivative(P));
}

Integer taylor_coefficient(const Polynomial& P, const Polynomial& Q, unsigned n) {
  Integer c = 0;
  const long top = std::max(P.degree(), Q.degree());
  for (long k = 0; k <= top; ++k) {
    if (k == 0) {
      // e^{0t} contributes t a_0 and -Q_0 only.
      if (n == 1) c += P[0];
      if (n == 0) c -= Q[0];
      continue;
    }
    const Integer kk(k);
    if (n == 0) {
      c -= Q[k];
      continue;
    }
    c += (n * P[k] - kk * Q[k]) * pow_integer(kk, n - 1);
  }
  return c;
}

namespace {

bool try_rshift(MonotonicityCertificate& cert) {
  for (long i = 0; i <= cert.P.degree(); ++i)
    if (cert.P[i] < 0) {
      cert.witnesses.push_back({Method::RShift, "P_coefficient", i, cert.P[i]});
      return false;
    }
  cert.R = r_polynomial(cert.P, cert.Q);
  const Polynomial shifted = shift_by_one(cert.R);
  for (long i = 0; i <= shifted.degree(); ++i)
    if (shifted[i] < 0) {
      cert.witnesses.push_back({Method::RShift, "shifted_coefficient", i, shifted[i]});
      return false;
    }
  return !cert.P.is_zero();
}

// Smallest n >= 2 with n a_k - k Q_k > 0 for every k >= 1 where a_k > 0,
// or nullopt with a witness when some k never becomes nonnegative.
std::optional<long> crossover(const MonotonicityCertificate& cert, std::optional<Witness>& bad) {
  long n_star = 2;
  const long top = std::max(cert.P.degree(), cert.Q.degree());
  bool any_positive = false;
  for (long k = 1; k <= top; ++k) {
    const Integer a = cert.P[k], kq = Integer(k) * cert.Q[k];
    if (a > 0) {
      any_positive = true;
      if (kq >= 0) {
        const Integer bound = kq / a + 1;
        n_star = std::max(n_star, bound.convert_to<long>());
      }
    } else if (a < 0 || kq > 0) {
      bad = Witness{Method::Taylor, "linear_form", k, a != 0 ? a : -kq};
      return std::nullopt;
    }
  }
  if (!any_positive) {
    bad = Witness{Method::Taylor, "linear_form", 0, 0};
    return std::nullopt;
  }
  return n_star;
}

bool try_taylor(MonotonicityCertificate& cert) {
  std::optional<Witness> bad;
  const auto n_star = crossover(cert, bad);
  if (!n_star) {
    cert.witnesses.push_back(*bad);
    return false;
  }
  cert.n_star = *n_star;
  cert.c.clear();
  for (long n = 0; n < *n_star; ++n) {
    cert.c.push_back(taylor_coefficient(cert.P, cert.Q, static_cast<unsigned>(n)));
    if (cert.c.back() < 0) {
      cert.witnesses.push_back({Method::Taylor, "c_n", n, cert.c.back()});
      return false;
    }
  }
  return true;
}

}  // namespace

MonotonicityCertificate certify(const Polynomial& P, const Polynomial& Q, Method method, const Rational& m) {
  if (Q.at_one() != 0) throw InvalidInput("certificate needs Q(1) = 0");
  MonotonicityCertificate cert;
  cert.m = m;
  cert.P = P;
  cert.Q = Q;
  if (method == Method::RShift || method == Method::Auto) {
    cert.method = Method::RShift;
    cert.valid = try_rshift(cert);
    if (cert.valid || method == Method::RShift) return cert;
  }
  cert.method = Method::Taylor;
  cert.valid = try_taylor(cert);
  return cert;
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"E2", "X42", "D2", "X81", "X101", "E4m1", "X61"};
  return names;
}

LemmaData lemma_data(const std::string& name) {
  auto block = [](std::vector<long> w) {
    std::vector<Integer> v{0};
    for (long c : w) v.emplace_back(c);
    return Polynomial(std::move(v));
  };
  auto eulerian_block = [](unsigned k) {
    return Polynomial::monomial(1, 1) * eulerian_numerator(k);
  };
  auto denom = [](unsigned b, unsigned k) {
    return power(Polynomial({1}) - Polynomial::monomial(1, b), k);
  };
  if (name == "E2") return {name, "t^2 (1 - E2(it))", 2, block({1}), denom(1, 2), true};
  if (name == "X42") return {name, "t^3 X_{4,2}(it)", 3, eulerian_block(2), denom(1, 3), true};
  if (name == "D2") return {name, "t^2 (E2(2it) - E2(it))", 2, block({1, 1, 1}), denom(2, 2), true};
  if (name == "X81") return {name, "t^6 X_{8,1}(it)", 6, eulerian_block(6), denom(1, 7), true};
  if (name == "X101") return {name, "t^8 X_{10,1}(it)", 8, eulerian_block(8), denom(1, 9), true};
  if (name == "E4m1") return {name, "t^4 (E4(it) - 1), not monotone", 4, block({1, 4, 1}), denom(1, 4), false};
  if (name == "X61") return {name, "t^5 X_{6,1}(it), not monotone", 5, eulerian_block(4), denom(1, 5), false};
  throw UnknownLabel("no Lambert lemma named '" + name + "'");
}

MonotonicityCertificate certify_lemma(const std::string& name, Method method) {
  const LemmaData d = lemma_data(name);
  const auto [P, Q] = derivative_numerator(d.m, d.S, d.T);
  auto cert = certify(P, Q, method, d.m);
  cert.name = name;
  return cert;
}

bool recheck(const MonotonicityCertificate& cert) {
  if (cert.Q.at_one() != 0) return false;
  MonotonicityCertificate fresh = certify(cert.P, cert.Q, cert.method, cert.m);
  if (fresh.valid != cert.valid) return false;
  if (!cert.valid) return true;
  if (cert.method == Method::RShift) return fresh.R == cert.R;
  return fresh.n_star == cert.n_star && fresh.c == cert.c;
}

Real numerator_value(const Polynomial& P, const Polynomial& Q, const Real& t) {
  const Real x = exp(t);
  auto eval = [&x](const Polynomial& f) {
    Real s = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) s = s * x + Real(*it);
    return s;
  };
  return t * eval(P) - eval(Q);
}

}  // namespace qmf::lambert
