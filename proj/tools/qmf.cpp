// Command-line front end: expansions, identity checks, positivity analytics,
// Lambert certificates, numerics and the acceptance report.
#include "qmf/acceptance.hpp"
#include "qmf/catalog.hpp"
#include "qmf/errors.hpp"
#include "qmf/identities.hpp"
#include "qmf/json_io.hpp"
#include "qmf/lambert.hpp"
#include "qmf/numeric.hpp"
#include "qmf/positivity.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>

namespace {

using qmf::io::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    const long n = std::stol(v);
    if (n > 0) return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
  }
  throw qmf::InvalidInput(std::string(name) + " must be a positive integer");
}

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const Json& j) { std::cout << qmf::io::dump(j); }

int cmd_expand(const Options& o, const std::string& label, std::size_t order) {
  const auto d = qmf::lookup_form(label);
  const auto f = d.build(order);
  if (o.json()) {
    Json j = qmf::io::to_json(f);
    j["label"] = label;
    j["weight"] = d.weight;
    j["depth"] = d.depth;
    j["level"] = qmf::to_string(d.level);
    emit(j);
  } else {
    std::cout << qmf::io::to_text(f) << "\n";
  }
  return kOk;
}

int cmd_identity(const Options& o, const std::string& id, bool all, std::optional<std::size_t> order) {
  std::vector<qmf::identities::IdentityResult> results;
  if (all)
    results = qmf::identities::verify_all(order);
  else
    results.push_back(qmf::identities::verify(id, order));
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (o.json()) {
      arr.push_back(qmf::io::to_json(r));
    } else {
      std::cout << (r.passed ? "pass " : "FAIL ") << r.id << "  order " << qmf::to_string(r.order_checked);
      if (r.failure)
        std::cout << "  first difference at q^" << qmf::to_string(r.failure->exponent) << ": "
                  << qmf::to_string(r.failure->value);
      std::cout << "\n";
    }
  }
  if (o.json()) emit({{"results", arr}, {"passed", ok}});
  return ok ? kOk : kFailed;
}

int cmd_positivity(const Options& o, const std::string& label, std::size_t order) {
  const auto r = qmf::positivity::check_complete_positivity(label, order);
  if (o.json()) {
    emit(qmf::io::to_json(r));
  } else {
    std::cout << label << " to q^" << qmf::to_string(r.order) << ": "
              << (r.completely_positive ? "completely positive" : "not completely positive");
    if (r.first_negative)
      std::cout << ", first negative coefficient " << qmf::to_string(r.first_negative->value) << " at q^"
                << qmf::to_string(r.first_negative->exponent);
    std::cout << "\n";
  }
  return r.completely_positive ? kOk : kFailed;
}

int cmd_density(const Options& o, const std::string& label, std::size_t n) {
  const auto r = qmf::positivity::sign_pattern(label, n);
  if (o.json()) {
    emit(qmf::io::to_json(r));
  } else {
    std::cout << label << ": " << r.count_positive << " of " << r.N << " coefficients positive, density "
              << r.density.convert_to<double>();
    if (r.predicted) std::cout << " (predicted " << qmf::to_string(*r.predicted) << ")";
    std::cout << "\n";
  }
  return kOk;
}

int cmd_ratio(const Options& o, const std::string& label, std::size_t dilate, std::size_t bound) {
  const auto f = qmf::lookup_form(label).build(dilate * bound);
  const auto r = qmf::positivity::ratio_infimum(f, dilate, bound);
  if (o.json()) {
    Json j = qmf::io::to_json(r);
    j["label"] = label;
    j["dilate"] = dilate;
    j["bound"] = bound;
    emit(j);
  } else {
    std::cout << label << ": min a_{" << dilate << "n}/a_n over n <= " << bound << " is "
              << (r.min_ratio ? qmf::to_string(*r.min_ratio) + " at n=" + std::to_string(r.argmin) : "undefined");
    if (!r.violations.empty()) std::cout << ", " << r.violations.size() << " nonpositive a_n skipped";
    std::cout << "\n";
  }
  return r.violations.empty() ? kOk : kFailed;
}

int cmd_scan(const Options& o, const std::string& label, const std::string& m, const qmf::numeric::GridSpec& g,
             unsigned bits) {
  auto cfg = qmf::numeric::default_config();
  cfg.precision_bits = bits;
  const auto r = qmf::numeric::monotonicity_scan(label, qmf::Rational(m), g, cfg);
  if (o.json()) {
    emit(qmf::io::to_json(r));
  } else {
    std::cout << "t^" << m << " " << label << "(it) on [" << g.t_min << ", " << g.t_max << "], " << g.points
              << " points: " << r.verdict() << "\n";
    for (const auto& [a, b] : r.sign_changes) std::cout << "  sign change in [" << a << ", " << b << "]\n";
  }
  return kOk;
}

int cmd_lambert(const Options& o, const std::string& name, bool all, const std::string& emit_path,
                const std::string& check_path) {
  if (!check_path.empty()) {
    std::ifstream in(check_path);
    if (!in) throw qmf::InvalidInput("cannot read " + check_path);
    const Json j = Json::parse(in);
    bool ok = true;
    Json arr = j.contains("certificates") ? j.at("certificates") : Json::array({j});
    for (const auto& c : arr) {
      const auto cert = qmf::io::certificate_from_json(c);
      const bool good = qmf::lambert::recheck(cert);
      ok = ok && good;
      if (!o.json()) std::cout << (good ? "rechecked " : "REJECTED ") << cert.name << "\n";
    }
    if (o.json()) emit({{"rechecked", ok}});
    return ok ? kOk : kFailed;
  }
  std::vector<std::string> names = all ? qmf::lambert::lemma_names() : std::vector<std::string>{name};
  bool ok = true;
  Json arr = Json::array();
  for (const auto& n : names) {
    const auto data = qmf::lambert::lemma_data(n);
    const auto cert = qmf::lambert::certify_lemma(n);
    const bool as_expected = cert.valid == data.expected_monotone;
    ok = ok && as_expected;
    arr.push_back(qmf::io::to_json(cert));
    if (!o.json()) {
      std::cout << n << " (" << data.description << "): " << (cert.valid ? "certified" : "not certified")
                << " by " << qmf::lambert::to_string(cert.method);
      if (cert.valid && cert.method == qmf::lambert::Method::Taylor) std::cout << ", n* = " << cert.n_star;
      for (const auto& w : cert.witnesses)
        std::cout << "; " << qmf::lambert::to_string(w.method) << " witness " << w.kind << "[" << w.index
                  << "] = " << w.value.str();
      std::cout << (as_expected ? "" : "  UNEXPECTED") << "\n";
    }
  }
  const Json doc = all ? Json{{"certificates", arr}} : arr.at(0);
  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    if (!out) throw qmf::InvalidInput("cannot write " + emit_path);
    out << qmf::io::dump(doc);
  }
  if (o.json()) emit(doc);
  return ok ? kOk : kFailed;
}

int cmd_limits(const Options& o, const std::string& label, unsigned bits) {
  static const std::regex pat("^X(\\d+)_1$");
  std::smatch m;
  if (!std::regex_match(label, m, pat)) throw qmf::UnknownLabel("limits needs a depth-1 label Xw_1");
  auto cfg = qmf::numeric::default_config();
  cfg.precision_bits = bits;
  const int w = std::stoi(m[1]);
  qmf::lookup_form(label);  // validates the weight
  const auto r = qmf::numeric::limit_t0(w, cfg);
  const bool ok = r.relative_error < qmf::Real("1e-6");
  if (o.json()) {
    emit(qmf::io::to_json(r));
  } else {
    std::cout << "lim t^" << (w - 1) << " " << label << "(it) = " << qmf::numeric::format_real(r.measured)
              << ", predicted -6(-1)^{w/2} beta0/pi = " << qmf::numeric::format_real(r.predicted)
              << " with beta0 = " << qmf::to_string(r.beta0) << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_eval(const Options& o, const std::string& label, const std::string& t, unsigned bits) {
  auto cfg = qmf::numeric::default_config();
  cfg.precision_bits = bits;
  qmf::PrecisionGuard guard(bits);
  const qmf::Real T(t);
  if (!(T > 0)) throw qmf::NonPositiveT("t must be positive");
  const qmf::numeric::FormEvaluator f(label, cfg, std::min(T.convert_to<double>(), 1.0));
  const auto direct = f.direct(T);
  const int digits = static_cast<int>(qmf::bits_to_digits(bits)) - 2;
  const qmf::Real value = f.value(T), deriv = f.derivative(T);
  if (o.json()) {
    emit({{"label", label},
          {"t", t},
          {"value", qmf::numeric::format_real(value, digits)},
          {"derivative", qmf::numeric::format_real(deriv, digits)},
          {"tail_estimate", qmf::numeric::format_real(direct.tail_estimate, 6)},
          {"route", f.has_components() && T < 1 ? "inverted" : "direct"}});
  } else {
    std::cout << label << "(i*" << t << ") = " << qmf::numeric::format_real(value, digits) << "\n"
              << label << "'(i*" << t << ") = " << qmf::numeric::format_real(deriv, digits) << "\n";
  }
  return kOk;
}

int cmd_plot(const std::string& id, bool all, std::size_t points, unsigned bits) {
  auto cfg = qmf::numeric::default_config();
  cfg.precision_bits = bits;
  const auto ids = all ? qmf::numeric::plot_ids() : std::vector<std::string>{id};
  for (const auto& i : ids) std::cout << qmf::numeric::to_tsv(qmf::numeric::plotdata(i, points, cfg));
  return kOk;
}

int cmd_report(const Options& o) {
  bool ok = true;
  Json arr = Json::array();
  for (int n = 1; n <= qmf::acceptance::kCriteria; ++n) {
    const auto r = qmf::acceptance::run_criterion(n);
    ok = ok && r.passed;
    if (o.json())
      arr.push_back({{"criterion", r.number},
                     {"title", r.title},
                     {"status", r.passed ? "pass" : "fail"},
                     {"failures", r.failures},
                     {"notes", r.notes}});
    else
      std::cout << qmf::acceptance::summary_line(r) << std::endl;
  }
  if (o.json()) emit({{"criteria", arr}, {"passed", ok}});
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series engine for quasimodular forms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::size_t default_order = 20;
  unsigned bits = 128;
  try {
    default_order = env_size("QMF_ORDER", 20);
    bits = static_cast<unsigned>(env_size("QMF_BITS", 128));
  } catch (const qmf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string label, id, m = "1", t, name, emit_path, check_path, figure;
  std::size_t order = default_order, n = 10000, dilate = 2, bound = 1000, points = 100;
  std::optional<std::size_t> id_order;
  if (std::getenv("QMF_ORDER")) id_order = default_order;
  bool all = false;
  qmf::numeric::GridSpec grid;

  auto* expand = app.add_subcommand("expand", "Print the q-expansion of a form");
  expand->add_option("form", label)->required();
  expand->add_option("--order", order, "Largest exponent");

  auto* identity = app.add_subcommand("identity", "Verify registered identities");
  identity->add_option("id", id);
  identity->add_flag("--all", all);
  identity->add_option("--order", id_order);

  auto* pos = app.add_subcommand("positivity", "Scan for negative coefficients");
  pos->add_option("form", label)->required();
  pos->add_option("--order", order);

  auto* dens = app.add_subcommand("density", "Fraction of positive coefficients");
  dens->add_option("form", label)->required();
  dens->add_option("--n", n);

  auto* ratio = app.add_subcommand("ratio-inf", "Minimum of a_{Nn}/a_n");
  ratio->add_option("form", label)->required();
  ratio->add_option("--dilate", dilate)->check(CLI::PositiveNumber);
  ratio->add_option("--bound", bound)->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "Sign scan of d/dt t^m F(it)");
  scan->add_option("form", label)->required();
  scan->add_option("--m", m)->required();
  scan->add_option("--tmin", grid.t_min)->check(CLI::PositiveNumber);
  scan->add_option("--tmax", grid.t_max)->check(CLI::PositiveNumber);
  scan->add_option("--points", grid.points)->check(CLI::PositiveNumber);
  scan->add_option("--bits", bits)->check(CLI::Range(64u, 4096u));

  auto* lam = app.add_subcommand("lambert-certify", "Monotonicity certificates for Lambert blocks");
  lam->add_option("name", name);
  lam->add_flag("--all", all);
  lam->add_option("--emit", emit_path, "Write certificate JSON here");
  lam->add_option("--check", check_path, "Re-verify a certificate file");

  auto* lim = app.add_subcommand("limits", "lim t^{w-1} X_{w,1}(it) as t -> 0");
  lim->add_option("form", label)->required();
  lim->add_option("--bits", bits)->check(CLI::Range(64u, 4096u));

  auto* ev = app.add_subcommand("eval", "Evaluate a form at z = it");
  ev->add_option("form", label)->required();
  ev->add_option("--t", t)->required();
  ev->add_option("--bits", bits)->check(CLI::Range(64u, 4096u));

  auto* plot = app.add_subcommand("plotdata", "TSV tables behind the monotonicity figures");
  plot->add_option("figure", figure)->check(CLI::IsMember(qmf::numeric::plot_ids()));
  plot->add_flag("--all", all);
  plot->add_option("--points", points)->check(CLI::Range(2u, 100000u));
  plot->add_option("--bits", bits)->check(CLI::Range(64u, 4096u));

  auto* report = app.add_subcommand("report", "Run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*expand) return cmd_expand(opt, label, order);
    if (*identity) {
      if (all == !id.empty()) throw qmf::InvalidInput("give an identity id or --all");
      return cmd_identity(opt, id, all, id_order);
    }
    if (*pos) return cmd_positivity(opt, label, order);
    if (*dens) return cmd_density(opt, label, n);
    if (*ratio) return cmd_ratio(opt, label, dilate, bound);
    if (*scan) return cmd_scan(opt, label, m, grid, bits);
    if (*lam) {
      if (check_path.empty() && all == !name.empty()) throw qmf::InvalidInput("give a lemma name or --all");
      return cmd_lambert(opt, name, all, emit_path, check_path);
    }
    if (*lim) return cmd_limits(opt, label, bits);
    if (*ev) return cmd_eval(opt, label, t, bits);
    if (*plot) {
      if (all == !figure.empty()) throw qmf::InvalidInput("give a figure id or --all");
      return cmd_plot(figure, all, points, bits);
    }
    if (*report) return cmd_report(opt);
  } catch (const qmf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (opt.json()) emit({{"error", {{"kind", e.kind()}, {"message", e.what()}}}});
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (opt.json()) emit({{"error", {{"kind", "internal"}, {"message", e.what()}}}});
    return kUsage;
  }
  return kUsage;
}
