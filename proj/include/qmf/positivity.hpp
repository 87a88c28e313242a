#pragma once

#include "qmf/qseries.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qmf::positivity {

struct SignedCoefficient {
  Rational exponent;
  Rational value;
};

struct PositivityReport {
  std::string label;
  Rational order;
  std::optional<SignedCoefficient> first_negative;
  bool completely_positive = false;  // no negative coefficient up to `order`
};

PositivityReport check_complete_positivity(const std::string& label, const FourierSeries& f);
PositivityReport check_complete_positivity(const std::string& label, std::size_t order);

struct DensityReport {
  std::string label;
  std::size_t N = 0;
  std::size_t count_positive = 0;
  Rational density;
  std::optional<Rational> predicted;
};

// Counts 1 <= n <= N with a_n > 0; f must have integer exponents.
DensityReport sign_pattern(const std::string& label, const FourierSeries& f, std::size_t N);
DensityReport sign_pattern(const std::string& label, std::size_t N);
// The density the literature predicts for P1..P4 and X42Delta.
std::optional<Rational> predicted_density(const std::string& label);

// Sign rule stated for P1, P2, P3, P4: expected sign (-1, 0, +1) of a_n.
std::optional<std::function<int(std::size_t)>> stated_sign_rule(const std::string& label);
// First n <= N whose sign differs from `rule`.
std::optional<SignedCoefficient> first_sign_mismatch(const FourierSeries& f,
                                                    const std::function<int(std::size_t)>& rule,
                                                    std::size_t N);

struct RatioReport {
  std::optional<Rational> min_ratio;
  std::size_t argmin = 0;
  std::vector<std::size_t> violations;  // n with a_n <= 0
};

// min a_{Nn}/a_n over 1 <= n <= bound.
RatioReport ratio_infimum(const FourierSeries& f, std::size_t n_dilate, std::size_t bound);

struct DoublingReport {
  bool ok = false;
  std::optional<std::size_t> witness;  // first n with c_{2n} < 2^e c_n
  bool ineq1_ok = false;             // odd 3 <= m <= 99
  bool ineq2_ok = false;             // 1 <= k <= 50
};

// c_{2n} >= 2^exponent c_n for 2 <= n <= bound on X_{12,2}, plus the two
// finite inequalities behind it, in exact arithmetic.
DoublingReport x122_doubling_check(std::size_t bound, unsigned exponent = 10);

// Lower bound of 2520/3 m^9 - 18224/21 s0(m) m^{11/2} + 12/7 m^10.
Rational doubling_ineq1_lower(long m);
// Lower bound of 2560/3 2^{9k} - 40/3 2^{2k}
//   - 17/21 ((2^{11/2} + 1048) k + 2^{13/2} + 1048) 2^{11k/2}.
Rational doubling_ineq2_lower(long k);

}  // namespace qmf::positivity
