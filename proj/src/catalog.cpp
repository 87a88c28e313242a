#include "qmf/catalog.hpp"

#include "qmf/errors.hpp"
#include "qmf/forms.hpp"

#include <map>
#include <regex>

namespace qmf {

std::string to_string(Level level) {
  switch (level) {
    case Level::SL2Z: return "SL2Z";
    case Level::Gamma0_2: return "Gamma0_2";
    case Level::Gamma0_4: return "Gamma0_4";
    case Level::Gamma_2: return "Gamma_2";
  }
  return "?";
}

namespace {

using forms::Eisenstein;
using Builder = std::function<FourierSeries(std::size_t)>;

constexpr int kMaxDepth1Weight = 240;
constexpr int kMaxDepth2Weight = 48;

FourierSeries e2_odd(std::size_t n) {
  const auto e2 = forms::E2(n);
  return scale(Rational(1, 48), sub(half_shift(e2), e2));
}

FourierSeries e2_comb(std::size_t n) {
  const auto e2 = forms::E2(n);
  FourierSeries r = sub(scale(6, dilate(e2, 4)), scale(5, dilate(e2, 2)));
  return scale(Rational(1, 24), sub(r, e2));
}

const std::map<std::string, FormDescriptor>& fixed_forms() {
  static const std::map<std::string, FormDescriptor> table = [] {
    std::map<std::string, FormDescriptor> t;
    auto put = [&t](std::string label, int w, int s, Level lv, Builder b) {
      t.emplace(label, FormDescriptor{label, w, s, lv, std::move(b), {}});
    };
    auto theta = [](auto pick) {
      return [pick](std::size_t n) { return pick(forms::theta_forms(n)); };
    };
    put("E2", 2, 1, Level::SL2Z, [](std::size_t n) { return forms::eisenstein(Eisenstein::E2, n); });
    put("E4", 4, 0, Level::SL2Z, [](std::size_t n) { return forms::eisenstein(Eisenstein::E4, n); });
    put("E6", 6, 0, Level::SL2Z, [](std::size_t n) { return forms::eisenstein(Eisenstein::E6, n); });
    put("E8", 8, 0, Level::SL2Z, [](std::size_t n) { return forms::eisenstein(Eisenstein::E8, n); });
    put("E10", 10, 0, Level::SL2Z, [](std::size_t n) { return forms::eisenstein(Eisenstein::E10, n); });
    put("Delta", 12, 0, Level::SL2Z, forms::delta);
    put("H2", 2, 0, Level::Gamma_2, theta([](const forms::ThetaForms& th) { return th.H2; }));
    put("H4", 2, 0, Level::Gamma_2, theta([](const forms::ThetaForms& th) { return th.H4; }));
    put("A", 4, 0, Level::Gamma_2, theta([](const forms::ThetaForms& th) { return th.A; }));
    put("B", 2, 0, Level::Gamma_2, theta([](const forms::ThetaForms& th) { return th.B; }));
    put("F", 16, 2, Level::SL2Z, forms::form_F);
    put("G", 14, 0, Level::Gamma_2, theta([](const forms::ThetaForms& th) { return forms::form_G(th); }));
    put("K10", 10, 0, Level::Gamma_2, theta([](const forms::ThetaForms& th) { return forms::form_K10(th); }));
    put("K12", 12, 0, Level::Gamma_2, theta([](const forms::ThetaForms& th) { return forms::form_K12(th); }));
    put("K14", 14, 0, Level::Gamma_2, theta([](const forms::ThetaForms& th) { return forms::form_K14(th); }));
    put("L", 14, 2, Level::Gamma_2, forms::form_L);
    put("script_L10", 32, 2, Level::Gamma_2, forms::form_script_L10);
    put("P1", 4, 2, Level::Gamma0_2, forms::form_P1);
    put("P2", 2, 1, Level::Gamma0_4, forms::form_P2);
    put("P3", 6, 1, Level::Gamma0_2, forms::form_P3);
    put("P4", 12, 1, Level::Gamma0_2, forms::form_P4);
    put("P1_alt", 4, 2, Level::Gamma0_4, [](std::size_t n) { return scale(-1, half_shift(forms::form_P1(n))); });
    put("P3_alt", 6, 1, Level::Gamma0_4, [](std::size_t n) { return scale(-1, half_shift(forms::form_P3(n))); });
    put("E2_odd", 2, 1, Level::Gamma0_4, e2_odd);
    put("E2_comb", 2, 1, Level::Gamma0_4, e2_comb);
    put("X42Delta", 16, 2, Level::SL2Z, forms::form_X42Delta);
    return t;
  }();
  return table;
}

[[noreturn]] void unknown(const std::string& label, const std::string& why) {
  throw UnknownLabel("unknown form label '" + label + "'" + (why.empty() ? "" : ": " + why));
}

}  // namespace

FormDescriptor lookup_form(const std::string& label) {
  if (auto it = fixed_forms().find(label); it != fixed_forms().end()) return it->second;

  static const std::regex pattern(R"(^(X|Y|Xtilde)(\d{1,3})_(1|2)$)");
  std::smatch m;
  if (!std::regex_match(label, m, pattern)) unknown(label, "");
  const std::string family = m[1];
  const int w = std::stoi(m[2]);
  const int s = std::stoi(m[3]);
  if (w % 2 != 0) unknown(label, "weight must be even");

  FormDescriptor d;
  d.label = label;
  d.weight = w;
  d.depth = s;
  d.level = family == "X" ? Level::SL2Z : Level::Gamma0_2;
  if (s == 1) {
    if (w < 6 || w > kMaxDepth1Weight) unknown(label, "depth-1 weights run from 6 to 240");
    if (family == "Xtilde") unknown(label, "Xtilde is defined for depth 2 only");
    if (family == "X") {
      d.build = [w](std::size_t n) { return extremal::x_w1(w, n); };
      d.components = [w](std::size_t n) { return extremal::x_w1_components(w, n); };
    } else {
      d.build = [w](std::size_t n) {
        const Rational c = pow_rational(2, static_cast<unsigned>(extremal::a_w_exponent(w)));
        return extremal::dilation_difference(extremal::x_w1(w, n), c, 2);
      };
    }
    return d;
  }
  if (w < 4 || w > kMaxDepth2Weight) unknown(label, "depth-2 weights run from 4 to 48");
  if (family == "X") {
    d.build = [w](std::size_t n) { return extremal::x_w2_any(w, n); };
  } else if (family == "Y") {
    d.build = [w](std::size_t n) { return *extremal::level2_families(w, n).Y_w2; };
  } else {
    d.build = [w](std::size_t n) { return *extremal::level2_families(w, n).Xtilde_w2; };
  }
  return d;
}

std::vector<std::string> label_patterns() {
  std::vector<std::string> out;
  for (const auto& [k, v] : fixed_forms()) out.push_back(k);
  out.push_back("Xw_1, Yw_1 (even 6 <= w <= 240; Yw_1 = X_{w,1} - 2^{a_w} X_{w,1}(2z))");
  out.push_back("Xw_2, Yw_2, Xtildew_2 (even 4 <= w <= 48)");
  return out;
}

}  // namespace qmf
