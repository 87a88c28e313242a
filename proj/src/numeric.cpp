#include "qmf/numeric.hpp"

#include "qmf/catalog.hpp"
#include "qmf/errors.hpp"
#include "qmf/forms.hpp"
#include "qmf/identities.hpp"
#include "qmf/lambert.hpp"
#include "qmf/positivity.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qmf::numeric {
namespace {

constexpr std::size_t kInvertedOrder = 200;  // the inverted route only sees t <= 1
constexpr std::size_t kScanOrder = 500;      // exact coefficient scans

int sign_of_half_weight(int w) { return (w / 2) % 2 == 0 ? 1 : -1; }

Real power(const Real& x, int e) { return boost::multiprecision::pow(x, e); }

}  // namespace

std::size_t default_order_policy(double t) {
  return std::max<std::size_t>(200, static_cast<std::size_t>(std::ceil(40.0 / t)));
}

EvalConfig default_config() {
  EvalConfig c;
  c.order_policy = default_order_policy;
  return c;
}

Real pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

Real to_real(const Rational& r) { return Real(numerator_of(r)) / Real(denominator_of(r)); }

Evaluation eval_series(const FourierSeries& f, const Real& t, const Rational& tail_safety) {
  if (t <= 0) throw NonPositiveT("evaluation needs t > 0");
  const Real x = exp(-2 * pi() * t / f.grain());
  Real sum = 0, xk = 1;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    if (f[k] != 0) sum += to_real(f[k]) * xk;
    if (k < f.order()) xk *= x;
  }
  Evaluation e;
  e.value = sum;
  e.tail_estimate = to_real(tail_safety) * abs(to_real(f[f.order()])) * xk * x / (1 - x);
  return e;
}

FormEvaluator::FormEvaluator(const std::string& label, EvalConfig cfg, double t_min)
    : label_(label), cfg_(std::move(cfg)) {
  if (!cfg_.order_policy) cfg_.order_policy = default_order_policy;
  if (t_min <= 0) throw NonPositiveT("t_min must be positive");
  const FormDescriptor d = lookup_form(label);
  weight_ = d.weight;
  series_ = d.build(cfg_.order_policy(t_min));
  dseries_ = d_operator(series_);
  if (d.components) {
    components_ = d.components(kInvertedOrder);
    small_x_ = d.build(kInvertedOrder);
    small_dx_ = d_operator(small_x_);
    small_b_ = components_->B;
    small_db_ = d_operator(small_b_);
  }
}

const extremal::Depth1Components& FormEvaluator::components() const {
  if (!components_) throw InvalidInput(label_ + " has no depth-1 components");
  return *components_;
}

Evaluation FormEvaluator::direct(const Real& t) const { return eval_series(series_, t, cfg_.tail_safety); }

Evaluation FormEvaluator::direct_derivative(const Real& t) const {
  return eval_series(dseries_, t, cfg_.tail_safety);
}

namespace {

struct InvertedData {
  Real X, dX, B, dB;  // at i/t
};

TransformedValue assemble(int w, const Real& t, const InvertedData& v) {
  const Real sigma = sign_of_half_weight(w);
  const Real c = 6 / pi();
  TransformedValue out;
  out.F = sigma * (power(t, -w) * v.X - c * power(t, 1 - w) * v.B);
  const Real dphi = sigma * (-w * power(t, -w - 1) * v.X + 2 * pi() * power(t, -w - 2) * v.dX +
                             c * (w - 1) * power(t, -w) * v.B - 12 * power(t, -w - 1) * v.dB);
  out.Fprime = -dphi / (2 * pi());
  return out;
}

}  // namespace

TransformedValue FormEvaluator::transformed(const Real& t) const {
  if (!components_) throw InvalidInput(label_ + " has no depth-1 components");
  if (t <= 0) throw NonPositiveT("evaluation needs t > 0");
  const Real u = 1 / t;
  return assemble(weight_, t,
                  {eval_series(small_x_, u).value, eval_series(small_dx_, u).value,
                   eval_series(small_b_, u).value, eval_series(small_db_, u).value});
}

TransformedValue eval_depth1_transformed(const extremal::Depth1Components& c, const Real& t, std::size_t order) {
  if (t <= 0) throw NonPositiveT("evaluation needs t > 0");
  (void)order;
  const auto x = add(c.A, mul(forms::E2(c.A.order()), c.B));
  const Real u = 1 / t;
  return assemble(c.w, t,
                  {eval_series(x, u).value, eval_series(d_operator(x), u).value, eval_series(c.B, u).value,
                   eval_series(d_operator(c.B), u).value});
}

Real FormEvaluator::value(const Real& t) const {
  if (components_ && t < cfg_.transform_below) return transformed(t).F;
  return direct(t).value;
}

Real FormEvaluator::derivative(const Real& t) const {
  if (components_ && t < cfg_.transform_below) return transformed(t).Fprime;
  return direct_derivative(t).value;
}

Real FormEvaluator::s_value(const Rational& m, const Real& t) const {
  const Real M = to_real(m);
  if (!(components_ && t < cfg_.transform_below)) return M * direct(t).value - 2 * pi() * t * direct_derivative(t).value;
  // m phi + t phi' with phi(t) = F(it); the B-term cancels exactly when m = w - 1.
  const int w = weight_;
  const Real u = 1 / t;
  const Real X = eval_series(small_x_, u).value, dX = eval_series(small_dx_, u).value;
  const Real B = eval_series(small_b_, u).value, dB = eval_series(small_db_, u).value;
  Real s = (M - w) * power(t, -w) * X + 2 * pi() * power(t, -w - 1) * dX - 12 * power(t, -w) * dB;
  if (m != w - 1) s += (6 / pi()) * (w - 1 - M) * power(t, 1 - w) * B;
  return sign_of_half_weight(w) * s;
}

std::vector<double> geometric_grid(const GridSpec& g) {
  if (g.t_min <= 0 || g.t_max < g.t_min) throw InvalidInput("grid needs 0 < t_min <= t_max");
  if (g.points < 2) return {g.t_min};
  std::vector<double> out(g.points);
  const double r = std::log(g.t_max / g.t_min) / static_cast<double>(g.points - 1);
  for (std::size_t i = 0; i < g.points; ++i) out[i] = g.t_min * std::exp(r * static_cast<double>(i));
  out.back() = g.t_max;
  return out;
}

ScanReport monotonicity_scan(const FormEvaluator& f, const Rational& m, const GridSpec& grid) {
  if (m <= 0) throw InvalidInput("m must be positive");
  ScanReport r;
  r.label = f.label();
  r.m = m;
  r.grid = geometric_grid(grid);
  for (double t : r.grid) r.s_values.push_back(f.s_value(m, Real(t)));
  for (std::size_t i = 0; i + 1 < r.s_values.size(); ++i)
    if ((r.s_values[i] > 0) != (r.s_values[i + 1] > 0)) r.sign_changes.emplace_back(r.grid[i], r.grid[i + 1]);
  r.monotone_decreasing = std::none_of(r.s_values.begin(), r.s_values.end(), [](const Real& s) { return s > 0; });
  return r;
}

ScanReport monotonicity_scan(const std::string& label, const Rational& m, const GridSpec& grid,
                             const EvalConfig& cfg) {
  PrecisionGuard guard(cfg.precision_bits);
  const FormEvaluator f(label, cfg, grid.t_min);
  return monotonicity_scan(f, m, grid);
}

TangentReport tangent_conditions(int w, int m, const EvalConfig& cfg) {
  PrecisionGuard guard(cfg.precision_bits);
  const std::string label = "X" + std::to_string(w) + "_1";
  const FormEvaluator f(label, cfg, 0.05);
  TangentReport r;
  auto ratio = [&f](double t) {
    const auto v = f.transformed(Real(t));
    return v.F / (Real(t) * v.Fprime);
  };
  r.limit_ratio = 2 * ratio(0.05) - ratio(0.1);
  r.expected_ratio = 2 * pi() / m;
  r.limit_ok = abs(r.limit_ratio / r.expected_ratio - 1) < Real("1e-6");

  const auto series = extremal::x_w1(w, kScanOrder);
  r.form_positive = positivity::check_complete_positivity(label, series).completely_positive;
  if (m == w - 1 && (w == 6 || w == 12 || w == 14)) {
    // The bracket is Delta^k times a completely positive cofactor, and Delta is
    // positive on the imaginary axis by its product formula.
    r.bracket_identity = "BR-" + std::to_string(w) + "1";
    r.bracket_identity_ok = identities::verify(*r.bracket_identity).passed;
    const FourierSeries cofactor = w == 6    ? extremal::x_w2(4, kScanOrder)
                                   : w == 12 ? forms::form_F(kScanOrder)
                                             : extremal::x_w2(8, kScanOrder);
    r.bracket_positive = r.bracket_identity_ok &&
                         positivity::check_complete_positivity("cofactor", cofactor).completely_positive;
  } else {
    const auto d1 = d_operator(series), d2 = d_operator(d1);
    const auto bracket = sub(scale(m + 1, mul(d1, d1)), scale(m, mul(d2, series)));
    r.bracket_positive = positivity::check_complete_positivity("bracket", bracket).completely_positive;
  }
  return r;
}

LimitReport limit_t0(int w, const EvalConfig& cfg, double t) {
  PrecisionGuard guard(cfg.precision_bits);
  const auto c = extremal::x_w1_components(w, kInvertedOrder);
  LimitReport r;
  r.w = w;
  r.beta0 = c.B[0];
  const Real T(t);
  r.measured = power(T, w - 1) * eval_depth1_transformed(c, T).F;
  r.predicted = -6 * sign_of_half_weight(w) * to_real(r.beta0) / pi();
  r.relative_error = abs(r.measured / r.predicted - 1);
  return r;
}

SmallTReport small_t_positivity_check(int w, const EvalConfig& cfg) {
  PrecisionGuard guard(cfg.precision_bits);
  const auto c = extremal::x_w1_components(w, kInvertedOrder);
  const auto x = add(c.A, mul(forms::E2(kInvertedOrder), c.B));
  const int sigma = sign_of_half_weight(w);
  SmallTReport r;
  r.w = w;
  r.beta1 = c.B[1];
  r.coefficient_ok = sigma * r.beta1 > 0;
  r.numeric_ok = true;
  for (int t : {5, 10, 20}) {
    const Real T(t);
    const Real e = sigma * power(T, w) *
                   (-2 * pi() * T * eval_series(d_operator(x), T).value + eval_series(x, T).value +
                    12 * eval_series(d_operator(c.B), T).value);
    if (!(e > 0)) r.numeric_ok = false;
  }
  return r;
}

Real e2_inversion_residual(const Real& t, const EvalConfig& cfg) {
  PrecisionGuard guard(cfg.precision_bits);
  const Real u = 1 / t;
  const double smaller = std::min(t.convert_to<double>(), u.convert_to<double>());
  const auto e2 = forms::E2((cfg.order_policy ? cfg.order_policy : default_order_policy)(smaller));
  return eval_series(e2, u).value + t * t * eval_series(e2, t).value - 6 * t / pi();
}

Real e6_at_i(const EvalConfig& cfg) {
  PrecisionGuard guard(cfg.precision_bits);
  return eval_series(forms::E6(default_order_policy(1)), Real(1)).value;
}

Real x81_critical_residual(const EvalConfig& cfg) {
  PrecisionGuard guard(cfg.precision_bits);
  const auto x = extremal::x_w1(8, default_order_policy(1));
  return 7 * eval_series(x, Real(1)).value - 2 * pi() * eval_series(d_operator(x), Real(1)).value;
}

X101AtI x101_at_i(const EvalConfig& cfg) {
  PrecisionGuard guard(cfg.precision_bits);
  X101AtI r;
  r.series = eval_series(extremal::x_w1(10, default_order_policy(1)), Real(1)).value;
  const Real p = pi();
  const Real g = boost::multiprecision::tgamma(Real(1) / 4);
  r.closed_form = (3 / p) * 9 * power(g, 16) / (4096 * power(p, 12)) / 720;
  r.relative_error = abs(r.series / r.closed_form - 1);
  r.lower_bound = 1 / (120 * p);
  return r;
}

const std::vector<std::string>& plot_ids() {
  static const std::vector<std::string> ids{"g8g9", "X81", "X101", "X121"};
  return ids;
}

PlotTable plotdata(const std::string& id, std::size_t points, const EvalConfig& cfg) {
  PrecisionGuard guard(cfg.precision_bits);
  if (points < 2) throw InvalidInput("plotdata needs at least two points");
  PlotTable tab;
  tab.id = id;
  auto linear = [points](double a, double b) {
    std::vector<Real> ts;
    for (std::size_t i = 0; i < points; ++i) ts.push_back(Real(a) + (Real(b) - Real(a)) * i / (points - 1));
    return ts;
  };
  if (id == "g8g9") {
    tab.title = "g_8(t) and g_9(t), the X_{10,1} Lambert block with t^8 and t^9, 2.5 <= t <= 20";
    tab.columns = {"t", "g8", "g9"};
    const auto w = lambert::eulerian_numerator(8);
    for (const Real& t : linear(2.5, 20)) {
      const Real x = exp(-t);
      Real num = 0;
      for (long k = w.degree(); k >= 0; --k) num = num * x + Real(w[k]);
      const Real block = x * num / power(1 - x, 9);
      tab.rows.push_back({t, power(t, 8) * block, power(t, 9) * block});
    }
    return tab;
  }
  int w = 0, m = 0;
  if (id == "X81") {
    w = 8, m = 7;
    tab.title = "t^7 X_{8,1}(it) and X_{8,1}(it)/X_{8,1}'(it) with the tangent 2 pi t/7";
  } else if (id == "X101") {
    w = 10, m = 9;
    tab.title = "t^8 X_{10,1}(it) and t^9 X_{10,1}(it), 0.1 <= t <= 5";
  } else if (id == "X121") {
    w = 12, m = 11;
    tab.title = "t^11 X_{12,1}(it) and X_{12,1}(it)/X_{12,1}'(it) with the tangent 2 pi t/11";
  } else {
    throw InvalidInput("unknown plot id '" + id + "'");
  }
  const std::string label = "X" + std::to_string(w) + "_1";
  const double a = 0.1, b = id == "X101" ? 5.0 : 3.0;
  const FormEvaluator f(label, cfg, a);
  if (id == "X101") {
    tab.columns = {"t", "t^8 F", "t^9 F"};
    for (const Real& t : linear(a, b)) {
      const Real v = f.value(t);
      tab.rows.push_back({t, power(t, 8) * v, power(t, 9) * v});
    }
    return tab;
  }
  tab.columns = {"t", "t^" + std::to_string(m) + " F", "F/F'", "2 pi t/" + std::to_string(m)};
  for (const Real& t : linear(a, b)) {
    const Real v = f.value(t), d = f.derivative(t);
    tab.rows.push_back({t, power(t, m) * v, v / d, 2 * pi() * t / m});
  }
  return tab;
}

std::string format_real(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

std::string to_tsv(const PlotTable& table, int digits) {
  std::ostringstream os;
  os << "# figure: " << table.id << "\n# " << table.title << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "\t" : "") << table.columns[i];
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << format_real(row[i], digits);
    os << "\n";
  }
  return os.str();
}

}  // namespace qmf::numeric
