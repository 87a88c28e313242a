#pragma once

#include "qmf/number.hpp"

#include <cstddef>
#include <vector>

namespace qmf::detail {

// First n_out coefficients of the product of two integer polynomials.
// Large inputs go through Kronecker substitution (one GMP multiplication);
// small ones use the schoolbook loop.
std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b,
                              std::size_t n_out);
std::vector<Integer> convolve_schoolbook(const std::vector<Integer>& a,
                                         const std::vector<Integer>& b, std::size_t n_out);
std::vector<Integer> convolve_kronecker(const std::vector<Integer>& a,
                                        const std::vector<Integer>& b, std::size_t n_out);

}  // namespace qmf::detail
