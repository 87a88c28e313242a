#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace qmf {

using Real = boost::multiprecision::mpfr_float;

// Sets the default MPFR precision for the lifetime of the guard. The default
// is process-wide, so high-precision work runs on one thread at a time.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_digits_;
};

unsigned bits_to_digits(unsigned bits);

}  // namespace qmf
