#pragma once

#include "qmf/extremal.hpp"
#include "qmf/qseries.hpp"
#include "qmf/real.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qmf::numeric {

struct EvalConfig {
  unsigned precision_bits = 128;
  // Absolute exponent up to which the series is summed at a given t.
  std::function<std::size_t(double t)> order_policy;
  Rational tail_safety = 10;
  // Depth-1 forms with components switch to the inverted route below this t.
  double transform_below = 1.0;
};
// 128 bits, order max(200, ceil(40/t)), tail safety 10.
EvalConfig default_config();
std::size_t default_order_policy(double t);

struct Evaluation {
  Real value;
  Real tail_estimate;  // heuristic: safety * |c_N| x^N / (1 - x)
};

// sum_r c_r e^{-2 pi r t} over the stored exponents r.
Evaluation eval_series(const FourierSeries& f, const Real& t, const Rational& tail_safety = 10);

Real pi();
Real to_real(const Rational& r);

// F(it) and F'(it) from the values of X_{w,1} and B_{w-2} at i/t, using
//   X(i/t) = (-1)^{w/2} [t^w X(it) - (6 t^{w-1}/pi) B(it)]
// read backwards. F' is the q d/dq derivative.
struct TransformedValue {
  Real F, Fprime;
};

// Evaluates one labelled form at z = it. Series are built once, to the order
// needed for the smallest t requested, and reused.
class FormEvaluator {
 public:
  FormEvaluator(const std::string& label, EvalConfig cfg = default_config(), double t_min = 0.05);

  const std::string& label() const { return label_; }
  int weight() const { return weight_; }
  bool has_components() const { return components_.has_value(); }

  Evaluation direct(const Real& t) const;             // F(it)
  Evaluation direct_derivative(const Real& t) const;  // F'(it)
  TransformedValue transformed(const Real& t) const;  // needs components
  // F(it), by the inverted route below cfg.transform_below when possible.
  Real value(const Real& t) const;
  Real derivative(const Real& t) const;
  // s(t) = m F(it) - 2 pi t F'(it); t^m F(it) decreases where s < 0. On the
  // inverted route it is assembled so that cancelling terms never appear.
  Real s_value(const Rational& m, const Real& t) const;

  const extremal::Depth1Components& components() const;

 private:
  std::string label_;
  int weight_ = 0;
  EvalConfig cfg_;
  FourierSeries series_, dseries_;
  std::optional<extremal::Depth1Components> components_;
  FourierSeries small_x_, small_dx_, small_b_, small_db_;  // for the inverted route
};

TransformedValue eval_depth1_transformed(const extremal::Depth1Components& c, const Real& t,
                                         std::size_t order = 200);

struct GridSpec {
  double t_min = 0.05;
  double t_max = 20;
  std::size_t points = 60;
};
std::vector<double> geometric_grid(const GridSpec& g);

struct ScanReport {
  std::string label;
  Rational m;
  std::vector<double> grid;
  std::vector<Real> s_values;
  std::vector<std::pair<double, double>> sign_changes;
  bool monotone_decreasing = false;
  std::string verdict() const { return monotone_decreasing ? "monotone_decreasing_on_grid" : "sign_change_found"; }
};

ScanReport monotonicity_scan(const std::string& label, const Rational& m, const GridSpec& grid = {},
                             const EvalConfig& cfg = default_config());
ScanReport monotonicity_scan(const FormEvaluator& f, const Rational& m, const GridSpec& grid = {});

struct TangentReport {
  Real limit_ratio;      // extrapolated F(it)/(t F'(it)) at t -> 0
  Real expected_ratio;   // 2 pi / m
  bool limit_ok = false;
  bool form_positive = false;     // F and F' completely positive to order 500
  // (m+1)(F')^2 - m F'' F > 0 on the imaginary axis: Delta^k times a completely
  // positive cofactor where a closed form is registered, else its own
  // coefficients are nonnegative to order 500.
  bool bracket_positive = false;
  std::optional<std::string> bracket_identity;  // registry id giving the bracket in closed form
  bool bracket_identity_ok = false;
  bool pass() const { return limit_ok && form_positive && bracket_positive && (!bracket_identity || bracket_identity_ok); }
};
TangentReport tangent_conditions(int w, int m, const EvalConfig& cfg = default_config());

struct LimitReport {
  int w;
  Real measured;   // t^{w-1} X_{w,1}(it) at small t
  Real predicted;  // -6 (-1)^{w/2} beta_{w-2,0} / pi
  Rational beta0;
  Real relative_error;
};
LimitReport limit_t0(int w, const EvalConfig& cfg = default_config(), double t = 0.01);

struct SmallTReport {
  int w;
  Rational beta1;
  bool coefficient_ok = false;  // (-1)^{w/2} beta_{w-2,1} > 0
  bool numeric_ok = false;      // expression positive at t = 5, 10, 20
  bool ok() const { return coefficient_ok && numeric_ok; }
};
SmallTReport small_t_positivity_check(int w, const EvalConfig& cfg = default_config());

// Spot checks at the special point z = i and the E2 transformation law.
Real e2_inversion_residual(const Real& t, const EvalConfig& cfg = default_config());
Real e6_at_i(const EvalConfig& cfg = default_config());
Real x81_critical_residual(const EvalConfig& cfg = default_config());  // 7X(i) - 2 pi X'(i)
struct X101AtI {
  Real series, closed_form, relative_error, lower_bound;  // lower_bound = 1/(120 pi)
};
X101AtI x101_at_i(const EvalConfig& cfg = default_config());

// Tab-separated (t, value...) tables behind the monotonicity figures.
struct PlotTable {
  std::string id;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Real>> rows;
};
const std::vector<std::string>& plot_ids();  // g8g9, X81, X101, X121
PlotTable plotdata(const std::string& id, std::size_t points = 100, const EvalConfig& cfg = default_config());
std::string to_tsv(const PlotTable& table, int digits = 20);

std::string format_real(const Real& x, int digits = 25);

}  // namespace qmf::numeric
