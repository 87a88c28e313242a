#include "qmf/acceptance.hpp"

#include "qmf/catalog.hpp"
#include "qmf/errors.hpp"
#include "qmf/extremal.hpp"
#include "qmf/forms.hpp"
#include "qmf/identities.hpp"
#include "qmf/json_io.hpp"
#include "qmf/lambert.hpp"
#include "qmf/numeric.hpp"
#include "qmf/positivity.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace qmf::acceptance {
namespace {

// Collects failed checks for one criterion.
class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    if (!ok) r_.failures.push_back(what);
  }
  void note(const std::string& what) { r_.notes.push_back(what); }

 private:
  CriterionResult& r_;
};

std::string str(const Rational& r) { return to_string(r); }

void identity_suite(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = identities::verify_all();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
      continue;
    }
    c.check(false, r.id + " fails at q^" + str(r.failure->exponent) + " (residual " + str(r.failure->value) + ")");
  }
  c.note(std::to_string(passed) + "/" + std::to_string(results.size()) + " identities in " +
         std::to_string(secs) + " s");
  c.check(secs < 120, "identity suite took " + std::to_string(secs) + " s");
  std::array<Rational, 6> a = {78278400, 550800, 90823680, 116640, 678813696000LL, 331776000};
  a[0] += 1;
  const auto bad = identities::verify_lcomb(a, 1, 120, "LCOMB-A-perturbed");
  c.check(!bad.passed && bad.failure && bad.failure->exponent <= 10, "perturbed LCOMB-A not caught by q^10");
}

void coefficient_laws(Checker& c) {
  for (int w = 6; w <= 120; w += 6)
    c.check(extremal::alpha_w0_closed(w) == extremal::alpha_w0_recurrence(w),
            "alpha_{" + std::to_string(w) + ",0} closed form differs from recurrence");
  for (int w = 12; w <= 60; w += 6) {
    const auto c0 = extremal::x_w1_components(w, 1), c2 = extremal::x_w1_components(w + 2, 1),
               c4 = extremal::x_w1_components(w + 4, 1);
    const Rational d(w - 6);
    const std::string tag = " at w=" + std::to_string(w);
    c.check(c0.A[1] / c0.A[0] == Rational(-12 * (w - 3) * (w + 4)) / d, "A_w ratio" + tag);
    c.check(c2.A[1] / c2.A[0] == Rational(-12 * (w * w - 9 * w - 24)) / d, "A_{w+2} ratio" + tag);
    c.check(c4.A[1] / c4.A[0] == Rational(-12 * (w * w - 19 * w + 108)) / d, "A_{w+4} ratio" + tag);
    c.check(c0.B[1] / c0.B[0] == Rational(-12 * (w - 1) * w) / d, "B_{w-2} ratio" + tag);
    c.check(c2.B[1] / c2.B[0] == Rational(-12 * (w - 12) * (w + 1)) / d, "B_w ratio" + tag);
    c.check(c4.B[1] / c4.B[0] == Rational(-12 * (w * w - 21 * w + 120)) / d, "B_{w+2} ratio" + tag);
  }
  for (int w = 6; w <= 120; w += 2) {
    const auto comp = extremal::x_w1_components(w, 0);
    c.check(comp.B[0] == -comp.A[0], "beta_{w-2,0} != -alpha_{w,0} at w=" + std::to_string(w));
  }
}

void golden_expansions(Checker& c) {
  const auto y4 = lookup_form("Y4_2").build(5);
  const std::vector<long> want{1, 2, 12, 4, 30};
  for (std::size_t n = 1; n <= 5; ++n)
    c.check(y4[n] == want[n - 1], "Y_{4,2} q^" + std::to_string(n) + " is " + str(y4[n]));
  const auto y16 = lookup_form("Y16_2").build(5);
  c.check(y16[5] == Rational(864, 25), "Y_{16,2} q^5 is " + str(y16[5]) + ", expected 864/25");
  const auto xd = forms::form_X42Delta(7);
  const std::vector<long> printed{1, -18, 1240, -220, -1620, 11676};
  for (std::size_t n = 2; n <= 7; ++n)
    c.check(xd[n] == printed[n - 2], "X_{4,2}Delta q^" + std::to_string(n) + " is " + str(xd[n]) +
                                         ", printed " + std::to_string(printed[n - 2]));
}

void positivity_criterion(Checker& c) {
  for (const char* label : {"Y4_2", "Y8_2", "Y10_2", "Y12_2"}) {
    const auto r = positivity::check_complete_positivity(label, 2000);
    c.check(r.completely_positive, std::string(label) + " has a negative coefficient at q^" +
                                       (r.first_negative ? str(r.first_negative->exponent) : "?"));
  }
  const auto d = positivity::x122_doubling_check(500);
  c.check(d.ok, "c_{2n} >= 2^10 c_n fails for X_{12,2}");
  c.check(d.ineq1_ok, "first doubling inequality fails for some odd m <= 99");
  c.check(d.ineq2_ok, "second doubling inequality fails for some k <= 50");
  for (const char* label : {"P1", "P2", "P3"}) {
    const auto rule = positivity::stated_sign_rule(label);
    const auto miss = positivity::first_sign_mismatch(lookup_form(label).build(2000), *rule, 2000);
    c.check(!miss, std::string(label) + " sign rule breaks at n=" + (miss ? str(miss->exponent) : "") +
                       " (coefficient " + (miss ? str(miss->value) : "") + ")");
  }
}

void ratio_infima(Checker& c) {
  const auto x4 = positivity::ratio_infimum(extremal::x_w2(4, 8192), 2, 4096);
  c.check(x4.min_ratio && *x4.min_ratio > 4 && *x4.min_ratio <= Rational(4002, 1000),
          "X_{4,2} ratio minimum " + (x4.min_ratio ? str(*x4.min_ratio) : "none") + " outside (4, 4.002]");
  const auto x8 = positivity::ratio_infimum(extremal::x_w2(8, 4096), 2, 2048);
  c.check(x8.min_ratio && *x8.min_ratio > 64, "X_{8,2} ratio minimum not above 2^6");
  const auto x10 = positivity::ratio_infimum(extremal::x_w2(10, 4096), 2, 2048);
  c.check(x10.min_ratio && *x10.min_ratio > 256, "X_{10,2} ratio minimum not above 2^8");
  if (x4.min_ratio) c.note("X_{4,2} minimum " + str(*x4.min_ratio) + " at n=" + std::to_string(x4.argmin));
}

void lambert_certificates(Checker& c) {
  for (const char* name : {"E2", "X42", "D2", "X81", "X101"}) {
    const auto cert = lambert::certify_lemma(name);
    c.check(cert.valid, std::string(name) + " does not certify");
    const auto back = io::certificate_from_json(io::Json::parse(io::dump(io::to_json(cert))));
    c.check(lambert::recheck(back), std::string(name) + " certificate does not re-verify from JSON");
  }
  const auto x101 = lambert::certify_lemma("X101");
  c.check(x101.method == lambert::Method::Taylor, "X101 not certified by the Taylor method");
  c.check(x101.n_star == 65, "X101 crossover is " + std::to_string(x101.n_star) + ", expected 65");
  if (x101.c.size() == 65) {
    c.check(x101.c[0] == 8, "X101 Taylor c_0 is " + x101.c[0].str() + " (= -Q(1)), stated 8");
    bool all_positive = true;
    for (std::size_t n = 1; n < 65; ++n) all_positive = all_positive && x101.c[n] > 0;
    c.check(all_positive, "X101 has c_n <= 0 for some 1 <= n <= 64");
  }
  for (const char* name : {"E4m1", "X61"}) {
    const auto cert = lambert::certify_lemma(name);
    c.check(!cert.valid && cert.witnesses.size() == 2, std::string(name) + " should fail both methods");
    const auto back = io::certificate_from_json(io::Json::parse(io::dump(io::to_json(cert))));
    c.check(lambert::recheck(back), std::string(name) + " failure does not re-verify from JSON");
  }
}

void numerics(Checker& c) {
  for (const char* t : {"0.3", "1", "2.5"})
    c.check(abs(numeric::e2_inversion_residual(Real(t))) < Real("1e-20"),
            std::string("E2 inversion residual too large at t=") + t);
  c.check(abs(numeric::e6_at_i()) < Real("1e-25"), "|E6(i)| >= 1e-25");
  c.check(abs(numeric::x81_critical_residual()) < Real("1e-15"), "7X_{8,1}(i) - 2pi X_{8,1}'(i) not ~ 0");
  const auto x = numeric::x101_at_i();
  c.check(x.relative_error < Real("1e-15"), "X_{10,1}(i) differs from its Gamma(1/4) closed form");
  c.check(x.series > x.lower_bound, "X_{10,1}(i) <= 1/(120 pi)");
}

void limits(Checker& c) {
  for (int w : {6, 12, 14}) {
    const auto r = numeric::limit_t0(w);
    c.check(r.relative_error < Real("1e-6"), "limit mismatch at w=" + std::to_string(w));
    if (w == 12) {
      PrecisionGuard guard(128);
      const Real v = 1 / (55440 * numeric::pi());
      c.check(abs(r.measured / v - 1) < Real("1e-6"), "w=12 limit is not 1/(55440 pi)");
      const Real printed = 1 / (55400 * numeric::pi());
      c.note("w=12 limit 1/(55440 pi); the printed 1/(55400 pi) is off by " +
             numeric::format_real(abs(r.measured / printed - 1), 3) + " relative");
    }
  }
}

void scans(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<const char*, int>> decreasing{
      {"X6_1", 5},  {"X12_1", 11}, {"X14_1", 13}, {"X8_2", 7}, {"X10_2", 9},
      {"X12_2", 11}, {"X14_2", 13}, {"X8_1", 6},   {"X10_1", 8}};
  for (const auto& [label, m] : decreasing)
    c.check(numeric::monotonicity_scan(label, m).monotone_decreasing,
            std::string("t^") + std::to_string(m) + " " + label + " not decreasing on grid");
  const auto x81 = numeric::monotonicity_scan("X8_1", 7);
  bool brackets_one = false;
  for (const auto& [a, b] : x81.sign_changes) brackets_one = brackets_one || (a < 1 && 1 < b);
  c.check(!x81.monotone_decreasing && brackets_one, "no sign change of (X8_1, 7) around t = 1");
  c.check(!numeric::monotonicity_scan("X10_1", 9).monotone_decreasing, "no sign change for (X10_1, 9)");
  for (int w = 6; w <= 24; w += 2)
    c.check(numeric::monotonicity_scan("X" + std::to_string(w) + "_1", extremal::a_w_exponent(w)).monotone_decreasing,
            "a_w scan not decreasing at w=" + std::to_string(w));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check(secs < 60, "scans took " + std::to_string(secs) + " s");
}

void inequality_chain(Checker& c) {
  for (const char* id : {"E1-A", "E1-B", "X121-DERIV"}) c.check(identities::verify(id).passed, std::string(id) + " fails");
  c.check(numeric::monotonicity_scan("X12_1", 11).monotone_decreasing, "t^11 X_{12,1}(it) not decreasing on grid");
}

const char* kTitles[kCriteria] = {"Identity suite",      "Coefficient laws",  "Golden expansions",
                                  "Positivity",          "Ratio infima",      "Lambert certificates",
                                  "Numerics at 128 bits", "Limits",           "Scan verdicts",
                                  "X_{12,1} inequality chain"};

}  // namespace

CriterionResult run_criterion(int number) {
  if (number < 1 || number > kCriteria) throw InvalidInput("criterion must be in 1..10");
  CriterionResult r;
  r.number = number;
  r.title = kTitles[number - 1];
  Checker c(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (number) {
      case 1: identity_suite(c); break;
      case 2: coefficient_laws(c); break;
      case 3: golden_expansions(c); break;
      case 4: positivity_criterion(c); break;
      case 5: ratio_infima(c); break;
      case 6: lambert_certificates(c); break;
      case 7: numerics(c); break;
      case 8: limits(c); break;
      case 9: scans(c); break;
      case 10: inequality_chain(c); break;
    }
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.failures.empty();
  return r;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int n = 1; n <= kCriteria; ++n) out.push_back(run_criterion(n));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %2d  %s (%.1f s)", r.passed ? "PASS" : "FAIL", r.number, r.title.c_str(),
                r.seconds);
  std::string line = buf;
  if (!r.failures.empty()) {
    line += " -- " + r.failures.front();
    if (r.failures.size() > 1) line += " (+" + std::to_string(r.failures.size() - 1) + " more)";
  }
  return line;
}

}  // namespace qmf::acceptance
