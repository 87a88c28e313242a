#include <doctest.h>

#include "qmf/errors.hpp"
#include "qmf/extremal.hpp"
#include "qmf/forms.hpp"
#include "qmf/numeric.hpp"

using namespace qmf;
using namespace qmf::numeric;

namespace {
const Real& tol20() {
  static const Real t("1e-20");
  return t;
}
}  // namespace

TEST_CASE("series evaluation") {
  PrecisionGuard guard(128);
  const auto e2 = forms::E2(200);
  CHECK(abs(eval_series(e2, Real(1)).value - 3 / pi()) < tol20());
  const auto e6 = eval_series(forms::E6(200), Real(1));
  CHECK(abs(e6.value) < e6.tail_estimate + Real("1e-38"));
  const auto d = eval_series(forms::delta(200), Real(10)).value;
  CHECK(d > 0);
  CHECK(d < 2 * exp(-2 * pi() * 10));
  CHECK_THROWS_AS(eval_series(e2, Real(0)), NonPositiveT);
  // Grain 2: q^{1/2} evaluates as e^{-pi t}.
  const FourierSeries half(2, {0, 1});
  CHECK(abs(eval_series(half, Real(1)).value - exp(-pi())) < tol20());
}

TEST_CASE("E2 transformation law and special values") {
  for (const char* t : {"0.3", "1", "2.5"}) CHECK(abs(e2_inversion_residual(Real(t))) < tol20());
  CHECK(abs(e6_at_i()) < Real("1e-25"));
  CHECK(abs(x81_critical_residual()) < Real("1e-15"));
  const auto x = x101_at_i();
  CHECK(x.relative_error < Real("1e-15"));
  CHECK(x.series > x.lower_bound);
}

TEST_CASE("direct and inverted evaluation agree") {
  PrecisionGuard guard(128);
  for (const char* label : {"X6_1", "X8_1", "X12_1", "X18_1"}) {
    const FormEvaluator f(label);
    REQUIRE(f.has_components());
    for (const char* ts : {"0.3", "0.5", "0.8", "1"}) {
      const Real t(ts);
      const auto tv = f.transformed(t);
      CHECK(abs(tv.F / f.direct(t).value - 1) < tol20());
      CHECK(abs(tv.Fprime / f.direct_derivative(t).value - 1) < tol20());
    }
  }
  // The free-standing route over explicit components.
  const auto c = extremal::x_w1_components(12, 200);
  const FormEvaluator f("X12_1");
  CHECK(abs(eval_depth1_transformed(c, Real("0.8")).F / f.direct(Real("0.8")).value - 1) < tol20());
}

TEST_CASE("log-convexity spot check") {
  PrecisionGuard guard(128);
  const auto x = extremal::x_w1(6, 200);
  const auto d1 = d_operator(x), d2 = d_operator(d1);
  for (const char* ts : {"0.5", "1", "2"}) {
    const Real t(ts);
    const Real F = eval_series(x, t).value, F1 = eval_series(d1, t).value, F2 = eval_series(d2, t).value;
    CHECK(F2 * F - F1 * F1 > 0);
  }
}

TEST_CASE("limits at t -> 0") {
  const auto w6 = limit_t0(6);
  CHECK(w6.beta0 == Rational(1, 720));
  CHECK(abs(w6.predicted - 1 / (120 * pi())) < tol20());
  const auto w12 = limit_t0(12);
  CHECK(w12.beta0 == Rational(-1, 332640));
  CHECK(abs(w12.predicted * 55440 * pi() - 1) < tol20());
  for (int w : {6, 10, 12, 14}) CHECK(limit_t0(w).relative_error < Real("1e-6"));
}

TEST_CASE("small-t positivity") {
  for (int w : {12, 16, 18, 24, 30, 36}) {
    INFO(w);
    CHECK(small_t_positivity_check(w).ok());
  }
}

TEST_CASE("tangent conditions") {
  for (int w : {6, 12, 14}) {
    INFO(w);
    const auto r = tangent_conditions(w, w - 1);
    CHECK(r.pass());
    REQUIRE(r.bracket_identity);
  }
}

TEST_CASE("monotonicity scans") {
  const std::vector<std::pair<const char*, int>> decreasing{
      {"X6_1", 5},  {"X12_1", 11}, {"X14_1", 13}, {"X8_2", 7}, {"X10_2", 9},
      {"X12_2", 11}, {"X14_2", 13}, {"X8_1", 6},   {"X10_1", 8}};
  for (const auto& [label, m] : decreasing) {
    INFO(label << " m=" << m);
    const auto r = monotonicity_scan(label, m);
    CHECK(r.monotone_decreasing);
    CHECK(r.sign_changes.empty());
    CHECK(r.grid.size() == 60);
  }
  const auto x81 = monotonicity_scan("X8_1", 7);
  CHECK_FALSE(x81.monotone_decreasing);
  REQUIRE(x81.sign_changes.size() == 1);
  CHECK(x81.sign_changes[0].first < 1);
  CHECK(x81.sign_changes[0].second > 1);
  CHECK(x81.verdict() == "sign_change_found");
  CHECK_FALSE(monotonicity_scan("X10_1", 9).monotone_decreasing);
  for (int w = 6; w <= 24; w += 2) {
    INFO(w);
    CHECK(monotonicity_scan("X" + std::to_string(w) + "_1", extremal::a_w_exponent(w)).monotone_decreasing);
  }
}

TEST_CASE("grids and plot data") {
  const auto g = geometric_grid({0.05, 20, 60});
  CHECK(g.front() == doctest::Approx(0.05));
  CHECK(g.back() == doctest::Approx(20));
  CHECK(g[1] / g[0] == doctest::Approx(g[2] / g[1]));
  CHECK_THROWS_AS(geometric_grid({0, 1, 5}), InvalidInput);
  for (const auto& id : plot_ids()) {
    const auto tab = plotdata(id, 5);
    CHECK(tab.rows.size() == 5);
    CHECK(tab.rows[0].size() == tab.columns.size());
    CHECK(to_tsv(tab).rfind("# figure: " + id, 0) == 0);
  }
  CHECK_THROWS_AS(plotdata("nope"), InvalidInput);
}
