#pragma once

#include "qmf/qseries.hpp"

#include <optional>

namespace qmf::extremal {

// X_{w,1} through the weight-raising recurrences from X_{6,1}.
FourierSeries x_w1(int w, std::size_t order);
// X_{w,1} through the derivative recurrences, integrating with zero constant
// term. Independent of x_w1 above w = 10.
FourierSeries x_w1_by_derivative(int w, std::size_t order);

// The form of maximal vanishing order in span{E2^j E4^a E6^b : j <= s} of
// weight w, normalized to leading coefficient 1, found by exact nullspace.
// Throws InvalidInput if that form is not unique.
FourierSeries extremal_by_vanishing(int w, int s, std::size_t order);

// X_{w,1} = A_w + E2 B_{w-2}.
struct Depth1Components {
  int w;
  FourierSeries A;  // weight w
  FourierSeries B;  // weight w - 2
};
Depth1Components x_w1_components(int w, std::size_t order);

// (-1)^{w/6} (w/6)! (w/3)! (w/2)! / (2w w!), for 6 | w.
Rational alpha_w0_closed(int w);
// Constant term of A_w from the scalar recurrences seeded by alpha_{6,0}.
Rational alpha_w0_recurrence(int w);

// X_{w,2} for w in {4, 8, 10, 12, 14} from explicit formulas.
FourierSeries x_w2(int w, std::size_t order);
// x_w2 where available, otherwise the nullspace construction.
FourierSeries x_w2_any(int w, std::size_t order);

struct Level2Families {
  std::optional<FourierSeries> Xtilde_w2;   // X_{w,2} - 2^{w-1} X_{w,2}(2z)
  std::optional<FourierSeries> Y_w2;        // X_{w,2} - 2^{w-2} X_{w,2}(2z)
  std::optional<FourierSeries> Y_w1_style;  // X_{w,1} - N^{a_w} X_{w,1}(Nz)
};
Level2Families level2_families(int w, std::size_t order, int n = 2);

// F - c F(Nz).
FourierSeries dilation_difference(const FourierSeries& f, const Rational& c, int n);

// w - ceil(w/6).
int a_w_exponent(int w);

}  // namespace qmf::extremal
