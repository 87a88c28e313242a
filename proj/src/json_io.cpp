#include "qmf/json_io.hpp"

#include "qmf/errors.hpp"

namespace qmf::io {
namespace {

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::vector<Integer> integers_from(const Json& j) {
  std::vector<Integer> v;
  for (const auto& x : j) v.emplace_back(x.get<std::string>());
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::string exponent_text(const Rational& r) {
  if (denominator_of(r) == 1) return r == 1 ? "q" : "q^" + to_string(r);
  return "q^{" + to_string(r) + "}";
}

}  // namespace

std::string to_text(const FourierSeries& f) {
  std::string out;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    const Rational& c = f[k];
    if (c == 0) continue;
    const Rational e(static_cast<long>(k), f.grain());
    const Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (e == 0) {
      out += to_string(a);
      continue;
    }
    if (a != 1) out += denominator_of(a) == 1 ? to_string(a) : "(" + to_string(a) + ")";
    out += exponent_text(e);
  }
  return out.empty() ? "0" : out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidInput("rational must be a string");
  try {
    return Rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw InvalidInput("bad rational '" + j.get<std::string>() + "'");
  }
}

Json to_json(const FourierSeries& f) {
  Json c = Json::array();
  for (const auto& x : f.coeffs())
    c.push_back(Json::array({to_string(numerator(x)), to_string(denominator(x))}));
  return {{"grain", f.grain()}, {"order", to_string(f.absolute_order())}, {"coeffs", c}};
}

FourierSeries series_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : field(j, "coeffs")) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_string() || !x[1].is_string())
      throw InvalidInput("series coefficient must be [numerator, denominator]");
    try {
      const Integer d(x[1].get<std::string>());
      if (d == 0) throw InvalidInput("zero denominator");
      c.emplace_back(Integer(x[0].get<std::string>()), d);
    } catch (const InvalidInput&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidInput("bad series coefficient");
    }
  }
  return FourierSeries(field(j, "grain").get<int>(), std::move(c));
}

Json to_json(const Polynomial& p) { return integers(p.coeffs()); }

Polynomial polynomial_from_json(const Json& j) { return Polynomial(integers_from(j)); }

Json to_json(const identities::IdentityResult& r) {
  Json j{{"id", r.id},
         {"anchor", r.anchor},
         {"order", to_string(r.order_checked)},
         {"status", r.passed ? "pass" : "fail"},
         {"elapsed_ms", static_cast<long>(r.elapsed_ms + 0.5)}};
  if (r.failure)
    j["failure"] = {{"equation", r.failing_equation},
                    {"exponent", to_string(r.failure->exponent)},
                    {"residual", to_string(r.failure->value)}};
  return j;
}

Json to_json(const lambert::MonotonicityCertificate& c) {
  Json j{{"name", c.name},
         {"m", to_string(c.m)},
         {"P", to_json(c.P)},
         {"Q", to_json(c.Q)},
         {"method", lambert::to_string(c.method)},
         {"status", c.valid ? "valid" : "failed"}};
  if (c.valid && c.method == lambert::Method::RShift) j["R"] = to_json(c.R);
  if (c.valid && c.method == lambert::Method::Taylor) j["taylor"] = {{"c_prefix", integers(c.c)}, {"n_star", c.n_star}};
  Json w = Json::array();
  for (const auto& x : c.witnesses)
    w.push_back({{"method", lambert::to_string(x.method)},
                 {"kind", x.kind},
                 {"index", x.index},
                 {"value", x.value.str()}});
  j["witnesses"] = w;
  return j;
}

lambert::MonotonicityCertificate certificate_from_json(const Json& j) {
  lambert::MonotonicityCertificate c;
  c.name = field(j, "name").get<std::string>();
  c.m = rational_from_json(field(j, "m"));
  c.P = polynomial_from_json(field(j, "P"));
  c.Q = polynomial_from_json(field(j, "Q"));
  c.method = lambert::method_from_string(field(j, "method").get<std::string>());
  const auto status = field(j, "status").get<std::string>();
  if (status != "valid" && status != "failed") throw InvalidInput("bad certificate status '" + status + "'");
  c.valid = status == "valid";
  if (j.contains("R")) c.R = polynomial_from_json(j.at("R"));
  if (j.contains("taylor")) {
    const auto& t = j.at("taylor");
    c.c = integers_from(field(t, "c_prefix"));
    c.n_star = field(t, "n_star").get<long>();
  }
  for (const auto& w : field(j, "witnesses"))
    c.witnesses.push_back({lambert::method_from_string(field(w, "method").get<std::string>()),
                           field(w, "kind").get<std::string>(), field(w, "index").get<long>(),
                           Integer(field(w, "value").get<std::string>())});
  return c;
}

Json to_json(const positivity::PositivityReport& r) {
  Json j{{"label", r.label}, {"order", to_string(r.order)}, {"completely_positive", r.completely_positive}};
  if (r.first_negative)
    j["first_negative"] = {{"exponent", to_string(r.first_negative->exponent)},
                           {"value", to_string(r.first_negative->value)}};
  return j;
}

Json to_json(const positivity::DensityReport& r) {
  Json j{{"label", r.label},
         {"N", r.N},
         {"count_positive", r.count_positive},
         {"density", to_string(r.density)},
         {"density_decimal", r.density.convert_to<double>()}};
  if (r.predicted) j["predicted"] = to_string(*r.predicted);
  return j;
}

Json to_json(const positivity::RatioReport& r) {
  Json j{{"argmin", r.argmin}, {"violations", r.violations}};
  if (r.min_ratio) {
    j["min_ratio"] = to_string(*r.min_ratio);
    j["min_ratio_decimal"] = r.min_ratio->convert_to<double>();
  }
  return j;
}

Json to_json(const positivity::DoublingReport& r) {
  Json j{{"ok", r.ok}, {"ineq1_ok", r.ineq1_ok}, {"ineq2_ok", r.ineq2_ok}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

Json to_json(const numeric::ScanReport& r, int digits) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < r.grid.size(); ++i)
    pts.push_back({{"t", r.grid[i]}, {"s", numeric::format_real(r.s_values[i], digits)}});
  Json changes = Json::array();
  for (const auto& [a, b] : r.sign_changes) changes.push_back({a, b});
  return {{"label", r.label}, {"m", to_string(r.m)}, {"points", pts}, {"sign_changes", changes},
          {"verdict", r.verdict()}};
}

Json to_json(const numeric::TangentReport& r, int digits) {
  Json j{{"limit_ratio", numeric::format_real(r.limit_ratio, digits)},
         {"expected_ratio", numeric::format_real(r.expected_ratio, digits)},
         {"limit_ok", r.limit_ok},
         {"form_positive", r.form_positive},
         {"bracket_positive", r.bracket_positive},
         {"verdict", r.pass() ? "pass" : "fail"}};
  if (r.bracket_identity) {
    j["bracket_identity"] = *r.bracket_identity;
    j["bracket_identity_ok"] = r.bracket_identity_ok;
  }
  return j;
}

Json to_json(const numeric::LimitReport& r, int digits) {
  return {{"w", r.w},
          {"measured", numeric::format_real(r.measured, digits)},
          {"predicted", numeric::format_real(r.predicted, digits)},
          {"beta0", to_string(r.beta0)},
          {"relative_error", numeric::format_real(r.relative_error, 6)}};
}

Json to_json(const numeric::SmallTReport& r) {
  return {{"w", r.w}, {"beta1", to_string(r.beta1)}, {"coefficient_ok", r.coefficient_ok},
          {"numeric_ok", r.numeric_ok}};
}

}  // namespace qmf::io
