#pragma once

#include "qmf/qseries.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qmf::identities {

struct Equation {
  FourierSeries lhs, rhs;
};

struct IdentityCase {
  std::string id;
  std::string anchor;  // what the identity is, in words
  std::size_t default_order;
  std::function<std::vector<Equation>(std::size_t order)> build;
};

struct IdentityResult {
  std::string id;
  std::string anchor;
  Rational order_checked;  // largest exponent actually compared
  bool passed = false;
  std::optional<Difference> failure;  // smallest offending exponent
  std::size_t failing_equation = 0;
  double elapsed_ms = 0;
};

// All registered identities sorted by id.
const std::vector<IdentityCase>& registry();
const IdentityCase& find(const std::string& id);  // throws UnknownIdentity

IdentityResult verify(const std::string& id, std::optional<std::size_t> order = std::nullopt);
IdentityResult verify(const IdentityCase& c, std::optional<std::size_t> order = std::nullopt);

// Runs every case whose id satisfies `filter` (all by default), in id order.
// An order given here overrides per-case defaults only when smaller.
std::vector<IdentityResult> verify_all(
    std::optional<std::size_t> order = std::nullopt,
    const std::function<bool(const std::string&)>& filter = {});

// L against a_1 X82(2z)AB + a_2 Xt82 AB + a_3 X102(2z)A + a_4 Xt102 A +
// a_5 X122(2z)B + a_6 Xt122 B. `tilde_offset` is 1 for the X - 2^{w-1}X(2z)
// family and 2 for the Y family.
IdentityResult verify_lcomb(const std::array<Rational, 6>& a, int tilde_offset, std::size_t order,
                            const std::string& id = "LCOMB");

}  // namespace qmf::identities
