#pragma once

#include "qmf/qseries.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qmf::forms {

// Divisor power sum sigma_a(n) by divisor enumeration.
Integer sigma(unsigned a, std::uint64_t n);
// sigma_a(0..n) by sieve; entry 0 is 0.
std::vector<Integer> sigma_table(unsigned a, std::size_t n);
// Number of representations as a sum of four squares (Jacobi).
Integer r4(std::uint64_t n);

// Largest n for which tau(n) may be requested.
inline constexpr std::size_t kTauLimit = 200000;
// tau(n) from q prod (1 - q^n)^24. Throws OrderExceeded above kTauLimit.
Integer tau(std::size_t n);
// tau(0..n), entry 0 is 0. Shared and immutable.
std::shared_ptr<const std::vector<Integer>> tau_table(std::size_t n);

enum class Eisenstein { E2, E4, E6, E8, E10 };
FourierSeries eisenstein(Eisenstein which, std::size_t order);
FourierSeries delta(std::size_t order);

// F' - (k/12) E2 F.
FourierSeries serre_derivative(const FourierSeries& f, const Rational& k);

// sum_r (-1)^r C(k-s+n-1, n-r) C(l-t+n-1, r) D^r F D^{n-r} G.
FourierSeries martin_royer_bracket(const FourierSeries& f, const FourierSeries& g, int n, int k,
                                   int s, int l, int t);

struct ThetaForms {
  FourierSeries H2, H4;  // grain 2
  FourierSeries A, B;    // integer exponents
};
ThetaForms theta_forms(std::size_t order);

struct CompositeForms {
  FourierSeries F, G, K10, K12, K14, L, script_L10, P1, P2, P3, P4, X42Delta;
};
CompositeForms composite_forms(std::size_t order);

// Individual builders behind composite_forms.
FourierSeries form_F(std::size_t order);
FourierSeries form_G(const ThetaForms& th);
FourierSeries form_K10(const ThetaForms& th);
FourierSeries form_K12(const ThetaForms& th);
FourierSeries form_K14(const ThetaForms& th);
FourierSeries form_L(std::size_t order);
FourierSeries form_script_L10(std::size_t order);
FourierSeries form_P1(std::size_t order);
FourierSeries form_P2(std::size_t order);
FourierSeries form_P3(std::size_t order);
FourierSeries form_P4(std::size_t order);
FourierSeries form_X42Delta(std::size_t order);

// Shorthands used all over the identity registry.
inline FourierSeries E2(std::size_t n) { return eisenstein(Eisenstein::E2, n); }
inline FourierSeries E4(std::size_t n) { return eisenstein(Eisenstein::E4, n); }
inline FourierSeries E6(std::size_t n) { return eisenstein(Eisenstein::E6, n); }

}  // namespace qmf::forms
